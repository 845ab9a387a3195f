#pragma once

#include "wpb/blockspace.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace wpb {

/// A code inside a BlockSpace: either the row span of a generator matrix
/// (kept in reduced row echelon form) or an explicit deduplicated word set.
class Code {
public:
    enum class Kind { linear, list };

    /// Row-reduces `rows`; dependent rows are dropped, so dimension() is
    /// the rank. Codewords are materialized when q^k fits in `limits`.
    static Code linear(BlockSpace space, std::vector<BlockVector> rows, const Limits& limits = {});
    /// Sorts and deduplicates `words`.
    static Code from_words(BlockSpace space, std::vector<BlockVector> words);

    const BlockSpace& space() const { return *space_; }
    Kind kind() const { return kind_; }
    bool is_linear() const { return kind_ == Kind::linear; }

    /// Rank of the generator; throws NotLinear for explicit codes.
    std::size_t dimension() const;
    /// Reduced generator rows and their pivot columns (linear codes only).
    const std::vector<BlockVector>& generator() const;
    const std::vector<std::size_t>& pivots() const;

    /// Every codeword in a fixed order: for linear codes the combinations
    /// Σ c_i g_i with (c_1..c_k) in odometer order, otherwise sorted.
    /// Throws SpaceTooLarge when a linear code was too big to materialize.
    const std::vector<BlockVector>& codewords() const;
    std::size_t size() const { return codewords().size(); }

    bool contains(std::span<const Element> v) const;
    /// v minus its pivot-column components: the canonical representative
    /// of v + C. Linear codes only.
    BlockVector reduce(std::span<const Element> v) const;

    /// Same words in the sibling space with another coordinate weight.
    Code with_weight(const WeightFn& weight) const;

private:
    Code() = default;

    std::shared_ptr<const BlockSpace> space_;
    Kind kind_ = Kind::list;
    std::vector<BlockVector> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<BlockVector> words_;
    bool materialized_ = false;
    double word_count_ = 0;
};

/// Minimum distance over distinct pairs. Linear codes use the minimum
/// nonzero codeword weight. Throws TooFewWords for |C| < 2.
unsigned min_distance(const Code& code);
/// Pairwise minimum regardless of kind, for cross-checks.
unsigned min_distance_pairwise(const Code& code);

/// max over v in F_q^n of min over c of d(v, c), by full scan.
unsigned covering_radius(const Code& code, const Limits& limits = {});
/// (min over v of the second-smallest distance from v to C) - 1.
unsigned packing_radius(const Code& code, const Limits& limits = {});
/// Every v lies within distance r of exactly one codeword.
bool is_r_perfect(const Code& code, unsigned r, const Limits& limits = {});
bool is_perfect(const Code& code, const Limits& limits = {});

struct CosetTable {
    /// Indexed by coset_index; each leader is the first vector in odometer
    /// order attaining the minimum weight of its coset.
    std::vector<BlockVector> leaders;
    std::vector<unsigned> weights;
    unsigned max_weight = 0;
};

/// Position of v + C in coset_table order (linear codes only).
std::uint64_t coset_index(const Code& code, std::span<const Element> v);
CosetTable coset_table(const Code& code, const Limits& limits = {});

/// Distinct values of block `block` over all codewords, sorted.
std::vector<BlockVector> project(const Code& code, std::size_t block);
/// Least l such that the joint projection on blocks l+1..s (1-based) is
/// the whole of F_q^{k_{l+1}} ⊕ ... ⊕ F_q^{k_s}; equals s when the last
/// block projection is not full. Throws NotAChain.
std::size_t trailing_full_index(const Code& code);
/// max over codewords of the weight computed with `alt` in place of the
/// space's coordinate weight.
unsigned max_poset_weight(const Code& code, const WeightFn& alt);

} // namespace wpb
