#pragma once

// Shared plumbing for the verification suites. Not installed.

#include "wpb/codes.hpp"
#include "wpb/instance.hpp"
#include "wpb/random.hpp"
#include "wpb/verify.hpp"

#include <string>
#include <vector>

namespace wpb::checks {

using nlohmann::json;

class Recorder {
public:
    Recorder(std::string suite, std::uint64_t seed, std::size_t trial, std::vector<CheckReport>& out)
        : suite_(std::move(suite)), seed_(seed), trial_(trial), out_(out) {}

    const std::string& digest() const { return digest_; }
    void set_instance(std::string digest) { digest_ = std::move(digest); }

    /// Asserted statement: a false `ok` is a hard failure.
    void hard(const std::string& check, bool ok, json detail);
    /// Reported statement: a false `ok` is logged as a soft discrepancy.
    void soft(const std::string& check, bool ok, json detail);
    void not_applicable(const std::string& check, const std::string& reason);
    void fail(const std::string& check, const std::string& message);

private:
    void emit(const std::string& check, Status status, json detail);

    std::string suite_;
    std::uint64_t seed_;
    std::size_t trial_;
    std::string digest_;
    std::vector<CheckReport>& out_;
};

json to_json(std::span<const Element> v);
std::string pair_digest(const Code& a, const Code& b);

/// q^n, saturating well above any cap in use.
double space_size(unsigned q, std::size_t n);

/// Covering radius by full scan. For linear codes the coset-table maximum
/// is compared against it and reported as coset-covering-crosscheck.
unsigned cover(Recorder& rec, const Code& code, const Limits& limits);

/// Minimum distance of the same words measured with the Hamming weight,
/// i.e. the (P, pi) poset block distance.
unsigned hamming_min_distance(const Code& code);
/// Covering radius with the Hamming weight (R in the tensor statements).
unsigned hamming_covering_radius(const Code& code, const Limits& limits);

/// Largest length whose space stays inside the desk-scale envelope.
std::size_t max_length(unsigned q);
unsigned pick_q(Rng& rng, const VerifyOptions& options, std::initializer_list<unsigned> choices);
/// Hamming, or Lee over prime fields, chosen at random.
WeightFn pick_weight(Rng& rng, const FieldPtr& field);
/// Chain, antichain or a random order.
Poset pick_poset(Rng& rng, std::size_t s, bool allow_general);
/// Random space with s in [1, max_s], blocks in [1, max_k] and n <= max_n.
BlockSpace random_space(Rng& rng, const Poset& poset, const WeightFn& weight, std::size_t max_k,
                        std::size_t max_n);
/// Random linear code of dimension in [min_dim, n].
Code random_code(Rng& rng, const BlockSpace& space, std::size_t min_dim = 1);

// Suites. Trial functions draw everything from `seed` (random suites) or
// `index` (exhaustive suites).
void metric_axioms_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void metric_envelope_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
std::size_t metric_envelope_count();
void reductions_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
std::size_t reductions_count();
void ball_lemma_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
std::size_t ball_lemma_count();

void packing_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void packing_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);
void chain_covering_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void chain_covering_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);
void codes_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void codes_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);

void direct_sum_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void direct_sum_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);
void plotkin_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void plotkin_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);
void extend_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void extend_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);
void puncture_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void puncture_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);

void tensor_trial(Recorder&, std::uint64_t seed, std::size_t index, const VerifyOptions&);
void tensor_checks(Recorder&, const std::vector<Code>&, const VerifyOptions&);

} // namespace wpb::checks
