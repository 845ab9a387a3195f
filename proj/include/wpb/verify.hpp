#pragma once

#include "wpb/codes.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wpb {

enum class Status { pass, fail, not_applicable, soft_discrepancy };
const char* to_string(Status status);

/// One (check, instance) outcome.
struct CheckReport {
    std::string check;
    std::string suite;
    /// instance_digest of the instance (or of the concatenated pair).
    std::string digest;
    /// Seed and index of the trial that generated the instance; together
    /// with the suite they replay the trial exactly.
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    Status status = Status::pass;
    /// Values compared; for fail and soft-discrepancy also the witness.
    nlohmann::json detail;
    double elapsed_ms = 0;
};

struct VerifyOptions {
    /// Suite names, or {"all"}.
    std::vector<std::string> suites{"all"};
    std::uint64_t seed = 1;
    /// Overrides each random suite's default trial count.
    std::optional<std::size_t> trials;
    /// Restricts suites that pick a field at random.
    std::optional<unsigned> q;
    Limits limits{};
    /// Worker threads for the trial pool; output does not depend on it.
    unsigned threads = 1;
};

struct SuiteInfo {
    std::string name;
    std::string description;
    /// Trials at default budget; exhaustive suites ignore VerifyOptions::trials.
    std::size_t default_trials;
    bool exhaustive;
    /// Number of instance files accepted by run_on_instances (0 = none).
    std::size_t instance_arity;
};

const std::vector<SuiteInfo>& suites();
/// Throws Error for unknown names.
const SuiteInfo& find_suite(const std::string& name);

/// Seed of trial `index` of `suite` under the run seed.
std::uint64_t trial_seed(std::uint64_t seed, const std::string& suite, std::size_t index);

/// Runs every selected suite and returns the reports in canonical order
/// (check, digest, seed, trial, status, detail).
std::vector<CheckReport> verify_suite(const VerifyOptions& options);
/// Re-runs one trial.
std::vector<CheckReport> replay_trial(const std::string& suite, std::uint64_t seed,
                                      std::size_t trial, const VerifyOptions& options);
/// Runs a suite's instance checks on user-supplied codes.
std::vector<CheckReport> run_on_instances(const std::string& suite, const std::vector<Code>& codes,
                                          const VerifyOptions& options);

void sort_reports(std::vector<CheckReport>& reports);
nlohmann::json report_to_json(const CheckReport& report, bool timing = false);
/// Per-check counts of pass / fail / not-applicable / soft-discrepancy.
std::string summary_table(const std::vector<CheckReport>& reports);
bool any_hard_failure(const std::vector<CheckReport>& reports);

} // namespace wpb
