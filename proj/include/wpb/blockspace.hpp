#pragma once

#include "wpb/field.hpp"
#include "wpb/poset.hpp"
#include "wpb/weights.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace wpb {

/// Enumeration guard shared by every brute-force routine.
struct Limits {
    std::uint64_t max_space = std::uint64_t{1} << 24;
    /// Worker threads for full-space scans; results do not depend on it.
    unsigned threads = 1;
};

/// Block sizes k_1..k_s with their prefix offsets.
class Labeling {
public:
    Labeling() = default;
    /// Throws OutOfRange if any size is zero.
    explicit Labeling(std::vector<std::size_t> sizes);
    static Labeling uniform(std::size_t s);

    std::size_t blocks() const { return sizes_.size(); }
    std::size_t length() const { return length_; }
    std::size_t size(std::size_t block) const { return sizes_[block]; }
    std::size_t offset(std::size_t block) const { return offsets_[block]; }
    const std::vector<std::size_t>& sizes() const { return sizes_; }
    bool is_trivial() const;

    friend bool operator==(const Labeling& a, const Labeling& b) { return a.sizes_ == b.sizes_; }

private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::size_t length_ = 0;
};

/// Coordinates of a vector in V = V_1 ⊕ ... ⊕ V_s, block i occupying
/// positions offset(i) .. offset(i) + k_i - 1.
using BlockVector = std::vector<Element>;

/// The weighted poset block space (V, d) for a poset, a labeling and a
/// coordinate weight over one field.
///
/// weight(u) = Σ_{i ∈ M_u} W_i(u) + |I_u \ M_u| · M_w where I_u is the ideal
/// generated by the block support of u, M_u its maximal elements and W_i(u)
/// the largest coordinate weight inside block i.
class BlockSpace {
public:
    /// Throws LengthMismatch if the poset and labeling disagree on s.
    BlockSpace(Poset poset, Labeling labeling, WeightFn weight);

    const Poset& poset() const { return poset_; }
    const Labeling& labeling() const { return labeling_; }
    const WeightFn& weight_fn() const { return weight_; }
    const Field& field() const { return weight_.gf(); }
    const FieldPtr& field_ptr() const { return weight_.field(); }
    std::size_t length() const { return labeling_.length(); }
    std::size_t blocks() const { return labeling_.blocks(); }

    /// Same poset and labeling under a different coordinate weight.
    BlockSpace with_weight(WeightFn weight) const;

    ElementSet block_support(std::span<const Element> u) const;
    unsigned block_max_weight(std::span<const Element> u, std::size_t block) const;
    /// Ideal generated by the block support.
    ElementSet support_ideal(std::span<const Element> u) const;
    unsigned weight(std::span<const Element> u) const;
    unsigned distance(std::span<const Element> u, std::span<const Element> v) const;

    BlockVector zero() const { return BlockVector(length(), 0); }
    BlockVector add(std::span<const Element> u, std::span<const Element> v) const;
    BlockVector sub(std::span<const Element> u, std::span<const Element> v) const;
    BlockVector neg(std::span<const Element> u) const;
    BlockVector scale(Element c, std::span<const Element> u) const;

    /// Number of vectors q^n; throws SpaceTooLarge above limits.max_space.
    std::uint64_t space_size(const Limits& limits = {}) const;
    /// Vector number `index` in odometer order (last coordinate fastest).
    BlockVector vector_at(std::uint64_t index) const;
    std::uint64_t index_of(std::span<const Element> u) const;
    /// weight of every vector, indexed by odometer position.
    std::vector<unsigned> weight_table(const Limits& limits = {}) const;

    /// All v with d(center, v) <= radius, in odometer order.
    std::vector<BlockVector> ball(std::span<const Element> center, unsigned radius,
                                  const Limits& limits = {}) const;
    std::uint64_t ball_size(std::span<const Element> center, unsigned radius,
                            const Limits& limits = {}) const;

    /// Same poset, labeling and weight table.
    friend bool operator==(const BlockSpace& a, const BlockSpace& b)
    {
        return a.poset_ == b.poset_ && a.labeling_ == b.labeling_ && a.weight_ == b.weight_;
    }

private:
    void check_length(std::span<const Element> u) const;

    Poset poset_;
    Labeling labeling_;
    WeightFn weight_;
};

/// Steps `digits` to the next vector in odometer order over GF(q).
/// Returns false after the last vector (digits wrap to zero).
inline bool next_vector(std::vector<Element>& digits, unsigned q)
{
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < q)
            return true;
        digits[k] = 0;
    }
    return false;
}

} // namespace wpb
