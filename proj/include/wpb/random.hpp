#pragma once

#include "wpb/codes.hpp"

#include <cstdint>
#include <random>

namespace wpb {

/// Deterministic generator: std::mt19937_64 plus modulo reduction, so the
/// same seed yields the same draws on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Uniform-ish value in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }
    /// Value in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    bool chance(unsigned percent) { return below(100) < percent; }

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Generator with `dim` independent rows drawn from `seed`; dependent draws
/// are rejected, so dim = n gives the whole space and dim = 0 the zero code.
/// Throws OutOfRange if dim > n.
Code random_linear_code(std::uint64_t seed, const BlockSpace& space, std::size_t dim);
Code random_linear_code(Rng& rng, const BlockSpace& space, std::size_t dim);

/// Random order on s elements: each pair i < j gets a cover i -> j with
/// probability 1/2 (then transitively closed).
Poset random_poset(Rng& rng, std::size_t s);
Labeling random_labeling(Rng& rng, std::size_t s, std::size_t max_block);
/// A valid weight table with values in 1..max_value, rejecting tables that
/// break symmetry or the triangle inequality.
WeightFn random_weight(Rng& rng, FieldPtr field, unsigned max_value = 4);

} // namespace wpb
