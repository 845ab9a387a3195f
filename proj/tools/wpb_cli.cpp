// Command-line front end. Exit codes: 0 all checks pass, 1 a hard check
// failed, 2 usage, parse or consistency error.

#include "wpb/constructions.hpp"
#include "wpb/errors.hpp"
#include "wpb/instance.hpp"
#include "wpb/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace wpb;

// "1,3,4" -> vector over the code's field, checked against length and q.
BlockVector parse_vector(const BlockSpace& space, const std::string& text)
{
    BlockVector out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long x = 0;
        try {
            x = std::stoul(item, &used);
        } catch (const std::exception&) {
            throw ParseError(0, "bad vector entry '" + item + "'");
        }
        if (used != item.size())
            throw ParseError(0, "bad vector entry '" + item + "'");
        if (x >= space.field().q())
            throw OutOfRange("symbol " + std::to_string(x) + " is not in GF(" +
                             std::to_string(space.field().q()) + ")");
        out.push_back(static_cast<Element>(x));
    }
    if (out.size() != space.length())
        throw LengthMismatch("vector has length " + std::to_string(out.size()) + ", expected " +
                             std::to_string(space.length()));
    return out;
}

std::string format_vector(std::span<const Element> v)
{
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k)
            out += ',';
        out += std::to_string(v[k]);
    }
    return out;
}

// Accepts a plain integer or 2^k.
std::uint64_t parse_space_limit(const std::string& text)
{
    const auto caret = text.find('^');
    try {
        if (caret == std::string::npos)
            return std::stoull(text);
        const auto base = std::stoull(text.substr(0, caret));
        const auto exp = std::stoull(text.substr(caret + 1));
        const double value = std::pow(static_cast<double>(base), static_cast<double>(exp));
        if (value > 1e18)
            throw ParseError(0, "--max-space too large");
        return static_cast<std::uint64_t>(value);
    } catch (const std::logic_error&) {
        throw ParseError(0, "bad --max-space value '" + text + "'");
    }
}

void write_instance(const Code& code, const std::string& path)
{
    if (path.empty() || path == "-")
        std::cout << dump_instance(code) << '\n';
    else
        save_instance(code, path);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weighted poset block metrics: code parameters, constructions and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string max_space = "2^24";
    unsigned threads = 1;
    app.add_option("--max-space", max_space, "Largest q^n enumerated (integer or 2^k)");
    app.add_option("--threads", threads, "Worker threads for scans and trials")->check(CLI::Range(1u, 256u));

    std::string file_a, file_b, vec_u, vec_v, out_path;
    unsigned radius = 0;
    bool count_only = false;

    auto* weight = app.add_subcommand("weight", "Weight of a vector in the instance's space");
    weight->add_option("instance", file_a)->required();
    weight->add_option("--vector,-u", vec_u, "Comma-separated symbols")->required();

    auto* distance = app.add_subcommand("distance", "Distance between two vectors");
    distance->add_option("instance", file_a)->required();
    distance->add_option("--u", vec_u)->required();
    distance->add_option("--v", vec_v)->required();

    auto* mindist = app.add_subcommand("mindist", "Minimum distance of the code");
    mindist->add_option("instance", file_a)->required();
    auto* covering = app.add_subcommand("covering-radius", "Covering radius by full scan");
    covering->add_option("instance", file_a)->required();
    auto* packing = app.add_subcommand("packing-radius", "Packing radius");
    packing->add_option("instance", file_a)->required();
    auto* cosets = app.add_subcommand("cosets", "Coset leaders of a linear code");
    cosets->add_option("instance", file_a)->required();

    auto* ball = app.add_subcommand("ball", "Vectors within a radius of a center");
    ball->add_option("instance", file_a)->required();
    ball->add_option("--center", vec_u)->required();
    ball->add_option("--radius", radius)->required();
    ball->add_flag("--count-only", count_only);

    std::string kind, order;
    std::size_t block = 0;
    auto* construct = app.add_subcommand("construct", "Build a code from one or two instances");
    construct->add_option("kind", kind)
        ->required()
        ->check(CLI::IsMember({"direct-sum", "plotkin", "extend", "puncture", "tensor"}));
    construct->add_option("first", file_a)->required();
    construct->add_option("second", file_b);
    construct->add_option("--order", order)->check(CLI::IsMember({"disjoint", "linear", "cartesian", "lex"}));
    construct->add_option("--block", block, "1-based block to delete (puncture)");
    construct->add_option("-o,--output", out_path, "Output instance file (default stdout)");

    std::vector<std::string> suite_names{"all"};
    std::uint64_t seed = 1;
    std::size_t trials = 0, trial = 0;
    unsigned q = 0;
    bool replay = false, timing = false, list = false;
    std::vector<std::string> instance_files;
    std::string report_path;
    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", suite_names, "Suite name or all; repeat for several")->allow_extra_args(false);
    verify->add_option("--seed", seed);
    verify->add_option("--trials", trials, "Trials per random suite");
    verify->add_option("--q", q, "Restrict random suites to one field size");
    verify->add_option("--trial", trial, "Trial index for --replay");
    verify->add_flag("--replay", replay, "Re-run one trial; --seed is the trial seed from a report");
    verify->add_flag("--timing", timing, "Add elapsed_ms to each record");
    verify->add_flag("--list", list, "List suites and exit");
    verify->add_option("--output", report_path, "Write JSON lines here instead of stdout");
    verify->add_option("instances", instance_files, "Instance files for a single suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Limits limits;
        limits.max_space = parse_space_limit(max_space);
        limits.threads = threads;

        if (*weight) {
            const Code code = load_instance(file_a);
            std::cout << code.space().weight(parse_vector(code.space(), vec_u)) << '\n';
        } else if (*distance) {
            const Code code = load_instance(file_a);
            const auto& sp = code.space();
            std::cout << sp.distance(parse_vector(sp, vec_u), parse_vector(sp, vec_v)) << '\n';
        } else if (*mindist) {
            std::cout << min_distance(load_instance(file_a)) << '\n';
        } else if (*covering) {
            std::cout << covering_radius(load_instance(file_a), limits) << '\n';
        } else if (*packing) {
            std::cout << packing_radius(load_instance(file_a), limits) << '\n';
        } else if (*cosets) {
            const auto table = coset_table(load_instance(file_a), limits);
            for (std::size_t i = 0; i < table.leaders.size(); ++i)
                std::cout << format_vector(table.leaders[i]) << ' ' << table.weights[i] << '\n';
            std::cout << "max " << table.max_weight << '\n';
        } else if (*ball) {
            const Code code = load_instance(file_a);
            const auto center = parse_vector(code.space(), vec_u);
            if (count_only) {
                std::cout << code.space().ball_size(center, radius, limits) << '\n';
            } else {
                for (const auto& v : code.space().ball(center, radius, limits))
                    std::cout << format_vector(v) << '\n';
            }
        } else if (*construct) {
            const Code a = load_instance(file_a);
            const bool binary = kind == "direct-sum" || kind == "plotkin" || kind == "tensor";
            if (binary == file_b.empty())
                throw ParseError(0, kind + (binary ? " needs two instance files" : " takes one instance file"));
            if (binary) {
                const Code b = load_instance(file_b);
                if (kind == "tensor") {
                    const std::string o = order.empty() ? "cartesian" : order;
                    if (o != "cartesian" && o != "lex")
                        throw ParseError(0, "tensor --order must be cartesian or lex");
                    write_instance(tensor_code(a, b, o == "lex" ? ProductOrder::lex : ProductOrder::cartesian).code,
                                   out_path);
                } else {
                    const std::string o = order.empty() ? "disjoint" : order;
                    if (o != "disjoint" && o != "linear")
                        throw ParseError(0, kind + " --order must be disjoint or linear");
                    const SumOrder so = o == "linear" ? SumOrder::linear : SumOrder::disjoint;
                    write_instance(kind == "plotkin" ? plotkin_code(a, b, so).code : direct_sum_code(a, b, so).code,
                                   out_path);
                }
            } else if (kind == "extend") {
                write_instance(extended_code(a).code, out_path);
            } else {
                if (block == 0)
                    throw ParseError(0, "puncture needs --block (1-based)");
                write_instance(punctured_code(a, block - 1).code, out_path);
            }
        } else if (*verify) {
            if (list) {
                for (const auto& s : suites())
                    std::cout << s.name << "  " << s.description << '\n';
                return 0;
            }
            VerifyOptions opts;
            opts.suites = suite_names;
            opts.seed = seed;
            if (trials > 0)
                opts.trials = trials;
            if (q > 0)
                opts.q = q;
            opts.limits = limits;
            opts.limits.threads = 1;
            opts.threads = threads;
            for (const auto& name : suite_names)
                if (name != "all")
                    find_suite(name);

            std::vector<CheckReport> reports;
            if (replay || !instance_files.empty()) {
                if (suite_names.size() != 1 || suite_names[0] == "all")
                    throw ParseError(0, "--replay and instance files need exactly one --suite");
                if (replay) {
                    reports = replay_trial(suite_names[0], seed, trial, opts);
                } else {
                    std::vector<Code> codes;
                    for (const auto& f : instance_files)
                        codes.push_back(load_instance(f));
                    reports = run_on_instances(suite_names[0], codes, opts);
                }
            } else {
                reports = verify_suite(opts);
            }

            std::ofstream file;
            if (!report_path.empty()) {
                file.open(report_path);
                if (!file)
                    throw Error("cannot write " + report_path);
            }
            std::ostream& out = report_path.empty() ? std::cout : file;
            for (const auto& r : reports)
                out << report_to_json(r, timing).dump() << '\n';
            std::cerr << summary_table(reports);
            return any_hard_failure(reports) ? 1 : 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
