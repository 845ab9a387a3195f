#include "checks.hpp"

#include "wpb/constructions.hpp"

#include <algorithm>

namespace wpb::checks {

namespace {

std::size_t length_cap(unsigned q, double cap)
{
    std::size_t n = 0;
    while (space_size(q, n + 1) <= cap)
        ++n;
    return n;
}

// Random block sizes in [1, max_k] summing to exactly n.
std::vector<std::size_t> partition(Rng& rng, std::size_t n, std::size_t max_k)
{
    std::vector<std::size_t> sizes;
    while (n > 0) {
        const std::size_t k = rng.between(1, std::min(n, max_k));
        sizes.push_back(k);
        n -= k;
    }
    return sizes;
}

BlockSpace space_of_length(Rng& rng, const WeightFn& w, std::size_t n)
{
    auto sizes = partition(rng, n, 2);
    const std::size_t s = sizes.size();
    return BlockSpace(pick_poset(rng, s, true), Labeling(std::move(sizes)), w);
}

WeightFn shared_weight(Rng& rng, const FieldPtr& field)
{
    if (rng.chance(20))
        return random_weight(rng, field, 3);
    return pick_weight(rng, field);
}

bool has_pair(const Code& c) { return c.size() >= 2; }

BlockVector concat(std::span<const Element> a, std::span<const Element> b)
{
    BlockVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

const char* suffix(SumOrder order) { return order == SumOrder::disjoint ? "-disjoint" : "-linear"; }

// Every pair of component coset leaders has the minimum weight of its coset
// in the sum code.
void coset_leader_check(Recorder& rec, const Code& c1, const Code& c2, const Code& sum,
                        SumOrder order, const Limits& limits)
{
    const std::string check = std::string("dsum-coset-leader") + suffix(order);
    if (space_size(sum.space().field().q(), sum.space().length()) > 1024) {
        rec.not_applicable(check, "space exceeds 2^10 vectors");
        return;
    }
    const auto t1 = coset_table(c1, limits);
    const auto t2 = coset_table(c2, limits);
    const auto t = coset_table(sum, limits);
    std::size_t pairs = 0;
    for (const auto& a : t1.leaders)
        for (const auto& b : t2.leaders) {
            ++pairs;
            const auto u = concat(a, b);
            const unsigned w = sum.space().weight(u);
            const unsigned best = t.weights[coset_index(sum, u)];
            if (w != best) {
                rec.hard(check, false,
                         {{"pairs", pairs}, {"witness", {{"leader1", to_json(a)}, {"leader2", to_json(b)},
                                                         {"weight", w}, {"coset_minimum", best}}}});
                return;
            }
        }
    rec.hard(check, true, {{"pairs", pairs}});
}

} // namespace

void direct_sum_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& c1 = codes.at(0);
    const Code& c2 = codes.at(1);
    const unsigned M = c1.space().weight_fn().max_weight();
    const std::size_t s = c1.space().blocks();
    const bool pair1 = has_pair(c1), pair2 = has_pair(c2);
    const unsigned d1 = pair1 ? min_distance(c1) : 0, d2 = pair2 ? min_distance(c2) : 0;
    const bool linear = c1.is_linear() && c2.is_linear();
    const unsigned r1 = linear ? cover(rec, c1, opts.limits) : 0;
    const unsigned r2 = linear ? cover(rec, c2, opts.limits) : 0;

    for (SumOrder order : {SumOrder::disjoint, SumOrder::linear}) {
        const Code sum = direct_sum_code(c1, c2, order).code;
        const std::string sfx = suffix(order);
        const bool disjoint = order == SumOrder::disjoint;

        if (disjoint ? !(pair1 && pair2) : !pair1) {
            rec.not_applicable("dsum-mindist" + sfx, "a component code has fewer than two words");
        } else {
            const unsigned d = min_distance(sum);
            const unsigned expected = disjoint ? std::min(d1, d2) : d1;
            rec.hard("dsum-mindist" + sfx, d == expected,
                     {{"d", d}, {"expected", expected}, {"d1", d1}, {"d2", pair2 ? json(d2) : json()}});
        }

        if (!linear) {
            rec.not_applicable("dsum-covering" + sfx, "component codes are not linear");
            rec.not_applicable("dsum-coset-leader" + sfx, "component codes are not linear");
            continue;
        }
        const unsigned rho = cover(rec, sum, opts.limits);
        const bool c2_full = c2.dimension() == c2.space().length();
        if (disjoint) {
            rec.hard("dsum-covering-disjoint", rho == r1 + r2,
                     {{"rho", rho}, {"rho1", r1}, {"rho2", r2}});
        } else if (c2_full) {
            // With C2 the whole space every coset has a representative
            // (u', 0), so the radius collapses to that of C1.
            rec.not_applicable("dsum-covering-linear", "C2 is the whole space");
            rec.hard("dsum-covering-linear-full", rho == r1, {{"rho", rho}, {"rho1", r1}});
        } else {
            rec.not_applicable("dsum-covering-linear-full", "C2 is a proper subspace");
            rec.hard("dsum-covering-linear", rho == s * M + r2,
                     {{"rho", rho}, {"s", s}, {"M_w", M}, {"rho2", r2}});
        }
        coset_leader_check(rec, c1, c2, sum, order, opts.limits);
    }
}

void direct_sum_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 5});
    const auto field = make_field(q);
    const WeightFn w = shared_weight(rng, field);
    const std::size_t total = std::min(length_cap(q, 1024), max_length(q));
    const std::size_t n2 = rng.between(std::min<std::size_t>(2, total - 1), total - 1);
    const std::size_t n1 = rng.between(1, total - n2);
    // Mostly proper nonzero codes, so the distance and radius equalities
    // apply; zero and full codes still appear.
    const Code c1 = random_code(rng, space_of_length(rng, w, n1), rng.chance(90) ? 1 : 0);
    const BlockSpace s2 = space_of_length(rng, w, n2);
    const Code c2 = n2 >= 2 && rng.chance(75) ? random_linear_code(rng, s2, rng.between(1, n2 - 1))
                                              : random_code(rng, s2, rng.chance(90) ? 1 : 0);
    rec.set_instance(pair_digest(c1, c2));
    direct_sum_checks(rec, {c1, c2}, opts);
}

void plotkin_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& c1 = codes.at(0);
    const Code& c2 = codes.at(1);
    const BlockSpace& qspace = c2.space();
    const unsigned M = c1.space().weight_fn().max_weight();
    const std::size_t s = c1.space().blocks();
    const bool pair1 = has_pair(c1), pair2 = has_pair(c2);
    const unsigned d1 = pair1 ? min_distance(c1) : 0, d2 = pair2 ? min_distance(c2) : 0;
    const bool linear = c1.is_linear() && c2.is_linear();

    // The sum map (a, b) -> a + b on C1 x C2 is injective iff the spans meet
    // only in zero; for word lists it is checked directly.
    bool injective = true;
    std::vector<BlockVector> sums;
    if (linear) {
        auto rows = c1.generator();
        rows.insert(rows.end(), c2.generator().begin(), c2.generator().end());
        injective = Code::linear(qspace, rows, Limits{0, 1}).dimension() ==
                    c1.dimension() + c2.dimension();
    }
    for (const auto& a : c1.codewords())
        for (const auto& b : c2.codewords())
            sums.push_back(qspace.add(a, b));
    if (!linear) {
        std::vector<BlockVector> sorted = sums;
        std::sort(sorted.begin(), sorted.end());
        injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    // C1 and C1 + C2 measured in the second component's space.
    const Code c1_in_q = Code::from_words(qspace, c1.codewords());
    const Code sum_in_q = Code::from_words(qspace, sums);
    const bool pair_sum = has_pair(sum_in_q);

    const unsigned r1 = linear ? cover(rec, c1, opts.limits) : 0;
    const unsigned r2 = linear ? cover(rec, c2, opts.limits) : 0;

    for (SumOrder order : {SumOrder::disjoint, SumOrder::linear}) {
        const Code code = plotkin_code(c1, c2, order).code;
        const std::string sfx = suffix(order);
        const bool disjoint = order == SumOrder::disjoint;
        const bool pair = has_pair(code);
        const unsigned d = pair ? min_distance(code) : 0;

        if (disjoint ? !(pair1 && pair2) : !pair1) {
            rec.not_applicable("plotkin-mindist" + sfx, "a component code has fewer than two words");
        } else {
            const unsigned bound = disjoint ? std::min(d1, d2) : d1;
            rec.hard("plotkin-mindist" + sfx, d >= bound, {{"d", d}, {"bound", bound}});
        }

        if (!injective) {
            rec.not_applicable("plotkin-refined" + sfx, "sum map on C1 x C2 is not injective");
        } else if (!(pair1 && pair2 && pair_sum)) {
            rec.not_applicable("plotkin-refined" + sfx, "a component code has fewer than two words");
        } else {
            const unsigned dq1 = min_distance_pairwise(c1_in_q);
            const unsigned dq12 = min_distance_pairwise(sum_in_q);
            json detail = {{"d", d}, {"d1", d1}, {"d2", d2}, {"d1_in_Q", dq1}, {"dsum_in_Q", dq12},
                           {"s", s}, {"M_w", M}};
            if (disjoint) {
                const unsigned bound = std::min({d2, d1 + dq1, d1 + dq12});
                detail["bound"] = bound;
                rec.hard("plotkin-refined-disjoint", d >= bound, detail);
            } else {
                const unsigned expected = std::min({d2, dq1, dq12}) + static_cast<unsigned>(s) * M;
                detail["expected"] = expected;
                rec.hard("plotkin-refined-linear", d == expected, detail);
            }
        }

        if (!linear) {
            rec.not_applicable("plotkin-covering" + sfx, "component codes are not linear");
            continue;
        }
        const unsigned rho = cover(rec, code, opts.limits);
        const unsigned bound = disjoint ? r1 + r2 : r2 + static_cast<unsigned>(s) * M;
        rec.hard("plotkin-covering" + sfx, rho <= bound,
                 {{"rho", rho}, {"bound", bound}, {"rho1", r1}, {"rho2", r2}});
    }
}

void plotkin_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 5});
    const auto field = make_field(q);
    const WeightFn w = shared_weight(rng, field);
    const std::size_t n = rng.between(1, std::max<std::size_t>(1, length_cap(q, 4096) / 2));
    // Half of the pairs keep k1 + k2 <= n so the sum map can be injective.
    const BlockSpace s1 = space_of_length(rng, w, n), s2 = space_of_length(rng, w, n);
    const bool small = n >= 2 && rng.chance(50);
    const std::size_t k1 = small ? rng.between(1, n - 1) : rng.between(rng.chance(90) ? 1 : 0, n);
    const std::size_t k2 = small ? rng.between(1, n - k1) : rng.between(rng.chance(90) ? 1 : 0, n);
    const Code c1 = random_linear_code(rng, s1, k1);
    const Code c2 = random_linear_code(rng, s2, k2);
    rec.set_instance(pair_digest(c1, c2));
    plotkin_checks(rec, {c1, c2}, opts);
}

void extend_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& c = codes.at(0);
    const Code ext = extended_code(c).code;
    const unsigned M = c.space().weight_fn().max_weight();
    if (!has_pair(c)) {
        rec.not_applicable("extend-mindist", "code has fewer than two words");
    } else {
        const unsigned d = min_distance(c), dx = min_distance(ext);
        rec.hard("extend-mindist", d <= dx && dx <= d + M, {{"d", d}, {"d_extended", dx}, {"M_w", M}});
    }
    if (!c.is_linear()) {
        rec.not_applicable("extend-covering", "code is not linear");
        return;
    }
    const unsigned r = cover(rec, c, opts.limits), rx = cover(rec, ext, opts.limits);
    rec.hard("extend-covering", r <= rx && rx <= r + M, {{"rho", r}, {"rho_extended", rx}, {"M_w", M}});
}

void extend_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 4, 5});
    const auto field = make_field(q);
    const WeightFn w = shared_weight(rng, field);
    const std::size_t n = rng.between(1, std::min(length_cap(q, 1024), max_length(q)) - 1);
    const Code c = random_code(rng, space_of_length(rng, w, n), 0);
    rec.set_instance(instance_digest(c));
    extend_checks(rec, {c}, opts);
}

void puncture_checks(Recorder& rec, const std::vector<Code>& codes, const VerifyOptions& opts)
{
    const Code& c = codes.at(0);
    const auto& space = c.space();
    if (space.blocks() < 2) {
        for (const char* check : {"puncture-vector-weight", "puncture-mindist", "puncture-covering"})
            rec.not_applicable(check, "needs at least two blocks");
        return;
    }
    const unsigned r = c.is_linear() ? cover(rec, c, opts.limits) : 0;
    for (std::size_t block = 0; block < space.blocks(); ++block) {
        const Code star = punctured_code(c, block).code;
        const auto& pspace = star.space();
        const std::uint64_t total = space.space_size(opts.limits);
        json witness;
        BlockVector u(space.length(), 0);
        for (std::uint64_t i = 0; i < total; ++i, next_vector(u, space.field().q())) {
            const auto ustar = puncture_vector(space.labeling(), u, block);
            if (pspace.weight(ustar) > space.weight(u)) {
                witness = {{"u", to_json(u)}, {"weight", space.weight(u)},
                           {"punctured_weight", pspace.weight(ustar)}};
                break;
            }
        }
        json detail = {{"block", block + 1}, {"vectors", total}};
        if (!witness.is_null())
            detail["witness"] = witness;
        rec.hard("puncture-vector-weight", witness.is_null(), detail);

        if (!has_pair(c)) {
            rec.not_applicable("puncture-mindist", "code has fewer than two words");
        } else if (star.size() != c.size()) {
            // Merged codewords can leave only pairs that were far apart.
            rec.not_applicable("puncture-mindist", "puncturing merges codewords");
        } else {
            const unsigned d = min_distance(c), ds = min_distance(star);
            rec.hard("puncture-mindist", ds <= d, {{"block", block + 1}, {"d", d}, {"d_punctured", ds}});
        }

        if (!c.is_linear()) {
            rec.not_applicable("puncture-covering", "code is not linear");
            continue;
        }
        const unsigned rs = cover(rec, star, opts.limits);
        rec.hard("puncture-covering", rs <= r, {{"block", block + 1}, {"rho", r}, {"rho_punctured", rs}});
    }
}

void puncture_trial(Recorder& rec, std::uint64_t seed, std::size_t, const VerifyOptions& opts)
{
    Rng rng(seed);
    const unsigned q = pick_q(rng, opts, {2, 3, 4, 5});
    const auto field = make_field(q);
    const WeightFn w = shared_weight(rng, field);
    const std::size_t n = rng.between(2, std::min(length_cap(q, 1024), max_length(q)));
    BlockSpace space = space_of_length(rng, w, n);
    if (space.blocks() < 2)
        space = BlockSpace(Poset::antichain(2), Labeling({1, n - 1}), w);
    const Code c = random_code(rng, space, 0);
    rec.set_instance(instance_digest(c));
    puncture_checks(rec, {c}, opts);
}

} // namespace wpb::checks
