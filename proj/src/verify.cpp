#include "wpb/verify.hpp"

#include "checks.hpp"
#include "wpb/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace wpb {

const char* to_string(Status status)
{
    switch (status) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::not_applicable:
        return "not-applicable";
    case Status::soft_discrepancy:
        return "soft-discrepancy";
    }
    return "fail";
}

namespace checks {

void Recorder::emit(const std::string& check, Status status, json detail)
{
    CheckReport r;
    r.check = check;
    r.suite = suite_;
    r.digest = digest_;
    r.seed = seed_;
    r.trial = trial_;
    r.status = status;
    r.detail = std::move(detail);
    out_.push_back(std::move(r));
}

void Recorder::hard(const std::string& check, bool ok, json detail)
{
    emit(check, ok ? Status::pass : Status::fail, std::move(detail));
}

void Recorder::soft(const std::string& check, bool ok, json detail)
{
    emit(check, ok ? Status::pass : Status::soft_discrepancy, std::move(detail));
}

void Recorder::not_applicable(const std::string& check, const std::string& reason)
{
    emit(check, Status::not_applicable, json{{"reason", reason}});
}

void Recorder::fail(const std::string& check, const std::string& message)
{
    emit(check, Status::fail, json{{"error", message}});
}

json to_json(std::span<const Element> v)
{
    json out = json::array();
    for (Element x : v)
        out.push_back(static_cast<unsigned>(x));
    return out;
}

std::string pair_digest(const Code& a, const Code& b)
{
    return digest_of(json::array({instance_to_json(a), instance_to_json(b)}).dump());
}

double space_size(unsigned q, std::size_t n)
{
    return std::pow(static_cast<double>(q), static_cast<double>(n));
}

unsigned cover(Recorder& rec, const Code& code, const Limits& limits)
{
    const unsigned scan = covering_radius(code, limits);
    if (code.is_linear()) {
        const std::string saved = rec.digest();
        rec.set_instance(instance_digest(code));
        const unsigned table = coset_table(code, limits).max_weight;
        rec.hard("coset-covering-crosscheck", scan == table,
                 {{"scan", scan}, {"coset_table_max", table}});
        rec.set_instance(saved);
    }
    return scan;
}

unsigned hamming_min_distance(const Code& code)
{
    return min_distance(code.with_weight(hamming_weight(code.space().field_ptr())));
}

unsigned hamming_covering_radius(const Code& code, const Limits& limits)
{
    return covering_radius(code.with_weight(hamming_weight(code.space().field_ptr())), limits);
}

std::size_t max_length(unsigned q)
{
    // Keeps q^n at or below about 2^12 so every suite stays well inside
    // the runtime budget.
    switch (q) {
    case 2:
        return 10;
    case 3:
        return 7;
    case 4:
        return 6;
    case 5:
        return 5;
    case 7:
        return 4;
    default:
        return 3;
    }
}

unsigned pick_q(Rng& rng, const VerifyOptions& options, std::initializer_list<unsigned> choices)
{
    if (options.q)
        return *options.q;
    return *(choices.begin() + rng.below(choices.size()));
}

WeightFn pick_weight(Rng& rng, const FieldPtr& field)
{
    if (field->is_prime() && rng.chance(50))
        return lee_weight(field);
    return hamming_weight(field);
}

Poset pick_poset(Rng& rng, std::size_t s, bool allow_general)
{
    const auto roll = rng.below(allow_general ? 3 : 2);
    if (roll == 0)
        return Poset::chain(s);
    if (roll == 1)
        return Poset::antichain(s);
    return random_poset(rng, s);
}

BlockSpace random_space(Rng& rng, const Poset& poset, const WeightFn& weight, std::size_t max_k,
                        std::size_t max_n)
{
    const std::size_t s = poset.size();
    std::vector<std::size_t> sizes(s, 1);
    std::size_t n = s;
    for (auto& k : sizes) {
        const std::size_t room = std::min(max_k, 1 + (max_n > n ? max_n - n : 0));
        k = rng.between(1, room);
        n += k - 1;
    }
    return BlockSpace(poset, Labeling(std::move(sizes)), weight);
}

Code random_code(Rng& rng, const BlockSpace& space, std::size_t min_dim)
{
    const std::size_t n = space.length();
    return random_linear_code(rng, space, rng.between(std::min(min_dim, n), n));
}

} // namespace checks

namespace {

using TrialFn = void (*)(checks::Recorder&, std::uint64_t, std::size_t, const VerifyOptions&);
using InstanceFn = void (*)(checks::Recorder&, const std::vector<Code>&, const VerifyOptions&);
using CountFn = std::size_t (*)();

struct SuiteEntry {
    SuiteInfo info;
    TrialFn trial;
    InstanceFn on_instances;
    CountFn count;
};

const std::vector<SuiteEntry>& registry()
{
    using namespace checks;
    static const std::vector<SuiteEntry> entries = {
        {{"metric-axioms", "metric axioms and weight bounds on random spaces", 50, false, 0},
         metric_axioms_trial, nullptr, nullptr},
        {{"metric-axioms-envelope",
          "metric axioms over every poset with s <= 3, blocks <= 2, q in {2,3}", 0, true, 0},
         metric_envelope_trial, nullptr, metric_envelope_count},
        {{"reductions", "Hamming, Lee, poset-block and NRT specializations", 0, true, 0},
         reductions_trial, nullptr, reductions_count},
        {{"ball-lemma", "ball inclusion and equality criterion on chains", 0, true, 0},
         ball_lemma_trial, nullptr, ball_lemma_count},
        {{"packing", "packing radius bound and equality criterion on chains", 200, false, 1},
         packing_trial, packing_checks, nullptr},
        {{"chain-covering", "covering radius sandwich from the trailing full index", 200, false, 1},
         chain_covering_trial, chain_covering_checks, nullptr},
        {{"codes", "minimum distance, packing and coset cross-checks", 100, false, 1},
         codes_trial, codes_checks, nullptr},
        {{"direct-sum", "direct sum distances, radii and coset leaders", 100, false, 2},
         direct_sum_trial, direct_sum_checks, nullptr},
        {{"plotkin", "(u'|u'+u'') distance and radius bounds", 100, false, 2}, plotkin_trial,
         plotkin_checks, nullptr},
        {{"extend", "extended code distance and radius sandwiches", 100, false, 1}, extend_trial,
         extend_checks, nullptr},
        {{"puncture", "punctured code weight, distance and radius bounds", 100, false, 1},
         puncture_trial, puncture_checks, nullptr},
        {{"tensor", "tensor product distance and covering radius statements", 100, false, 2},
         tensor_trial, tensor_checks, nullptr},
    };
    return entries;
}

const SuiteEntry& entry(const std::string& name)
{
    for (const auto& e : registry())
        if (e.info.name == name)
            return e;
    throw Error("unknown suite '" + name + "'");
}

std::size_t trial_count(const SuiteEntry& e, const VerifyOptions& options)
{
    if (e.info.exhaustive)
        return e.count();
    return options.trials.value_or(e.info.default_trials);
}

std::vector<CheckReport> run_one(const SuiteEntry& e, std::uint64_t seed, std::size_t index,
                                 const VerifyOptions& options)
{
    std::vector<CheckReport> out;
    checks::Recorder rec(e.info.name, seed, index, out);
    const auto start = std::chrono::steady_clock::now();
    try {
        e.trial(rec, seed, index, options);
    } catch (const std::exception& ex) {
        rec.fail(e.info.name + "-error", ex.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : out)
        r.elapsed_ms = ms;
    return out;
}

} // namespace

const std::vector<SuiteInfo>& suites()
{
    static const std::vector<SuiteInfo> infos = [] {
        std::vector<SuiteInfo> v;
        for (const auto& e : registry())
            v.push_back(e.info);
        return v;
    }();
    return infos;
}

const SuiteInfo& find_suite(const std::string& name) { return entry(name).info; }

std::uint64_t trial_seed(std::uint64_t seed, const std::string& suite, std::size_t index)
{
    const std::uint64_t tag = std::stoull(digest_of(suite), nullptr, 16);
    return splitmix64(splitmix64(seed ^ tag) + index);
}

std::vector<CheckReport> verify_suite(const VerifyOptions& options)
{
    std::vector<const SuiteEntry*> selected;
    for (const auto& name : options.suites) {
        if (name == "all") {
            for (const auto& e : registry())
                selected.push_back(&e);
        } else {
            selected.push_back(&entry(name));
        }
    }

    struct Task {
        const SuiteEntry* suite;
        std::uint64_t seed;
        std::size_t index;
    };
    std::vector<Task> tasks;
    for (const auto* e : selected)
        for (std::size_t i = 0, n = trial_count(*e, options); i < n; ++i)
            tasks.push_back({e, trial_seed(options.seed, e->info.name, i), i});

    std::vector<std::vector<CheckReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();)
            results[t] = run_one(*tasks[t].suite, tasks[t].seed, tasks[t].index, options);
    };
    const unsigned workers = std::max(1u, options.threads);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }

    std::vector<CheckReport> reports;
    for (auto& r : results)
        std::move(r.begin(), r.end(), std::back_inserter(reports));
    sort_reports(reports);
    return reports;
}

std::vector<CheckReport> replay_trial(const std::string& suite, std::uint64_t seed,
                                      std::size_t trial, const VerifyOptions& options)
{
    auto out = run_one(entry(suite), seed, trial, options);
    sort_reports(out);
    return out;
}

std::vector<CheckReport> run_on_instances(const std::string& suite, const std::vector<Code>& codes,
                                          const VerifyOptions& options)
{
    const SuiteEntry& e = entry(suite);
    if (e.on_instances == nullptr || e.info.instance_arity != codes.size())
        throw Error("suite '" + suite + "' takes " + std::to_string(e.info.instance_arity) +
                    " instance file(s)");
    std::vector<CheckReport> out;
    checks::Recorder rec(suite, 0, 0, out);
    rec.set_instance(codes.size() == 1 ? instance_digest(codes[0])
                                       : checks::pair_digest(codes[0], codes[1]));
    try {
        e.on_instances(rec, codes, options);
    } catch (const std::exception& ex) {
        rec.fail(suite + "-error", ex.what());
    }
    sort_reports(out);
    return out;
}

void sort_reports(std::vector<CheckReport>& reports)
{
    auto key = [](const CheckReport& r) {
        return std::make_tuple(std::cref(r.check), std::cref(r.digest), r.seed, r.trial,
                               static_cast<int>(r.status));
    };
    std::stable_sort(reports.begin(), reports.end(), [&](const CheckReport& a, const CheckReport& b) {
        if (key(a) != key(b))
            return key(a) < key(b);
        return a.detail.dump() < b.detail.dump();
    });
}

nlohmann::json report_to_json(const CheckReport& r, bool timing)
{
    nlohmann::json j = {{"check", r.check},   {"suite", r.suite},
                        {"digest", r.digest}, {"seed", r.seed},
                        {"trial", r.trial},   {"status", to_string(r.status)},
                        {"detail", r.detail}};
    if (timing)
        j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string summary_table(const std::vector<CheckReport>& reports)
{
    std::map<std::string, std::array<std::size_t, 4>> counts;
    for (const auto& r : reports)
        ++counts[r.check][static_cast<int>(r.status)];
    std::size_t width = 5;
    for (const auto& [check, _] : counts)
        width = std::max(width, check.size());
    std::ostringstream out;
    char line[256];
    std::snprintf(line, sizeof line, "%-*s %6s %6s %6s %6s\n", static_cast<int>(width), "check",
                  "pass", "fail", "n/a", "soft");
    out << line;
    std::array<std::size_t, 4> total{};
    for (const auto& [check, c] : counts) {
        std::snprintf(line, sizeof line, "%-*s %6zu %6zu %6zu %6zu\n", static_cast<int>(width),
                      check.c_str(), c[0], c[1], c[2], c[3]);
        out << line;
        for (int i = 0; i < 4; ++i)
            total[i] += c[i];
    }
    std::snprintf(line, sizeof line, "%-*s %6zu %6zu %6zu %6zu\n", static_cast<int>(width), "total",
                  total[0], total[1], total[2], total[3]);
    out << line;
    return out.str();
}

bool any_hard_failure(const std::vector<CheckReport>& reports)
{
    return std::any_of(reports.begin(), reports.end(),
                       [](const CheckReport& r) { return r.status == Status::fail; });
}

} // namespace wpb
