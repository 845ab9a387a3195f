#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace wpb {

// Subset of poset elements as a bitmask; bit i is element i (0-based).
using ElementSet = std::uint64_t;

inline constexpr std::size_t max_poset_size = 64;

inline bool contains(ElementSet set, std::size_t i) { return (set >> i) & 1u; }
inline ElementSet singleton(std::size_t i) { return ElementSet{1} << i; }
inline ElementSet all_elements(std::size_t s)
{
    return s >= 64 ? ~ElementSet{0} : (ElementSet{1} << s) - 1;
}
int popcount(ElementSet set);

/// A finite order on {0, ..., s-1}, stored as the full relation (one
/// down-set mask per element) so ideal queries are a handful of ORs.
/// Elements are 0-based here; instance files and the CLI use 1-based labels.
class Poset {
public:
    using Cover = std::pair<std::size_t, std::size_t>; // first < second

    Poset() = default;

    /// Reflexive-transitive closure of the cover pairs. Throws
    /// CycleDetected if the closure is not antisymmetric.
    static Poset from_cover_relations(std::size_t s, const std::vector<Cover>& covers);
    /// Builds from an explicit relation leq[i][j] meaning i <= j; the input
    /// must already be a partial order.
    static Poset from_relation(const std::vector<std::vector<bool>>& leq);
    static Poset chain(std::size_t s);
    static Poset antichain(std::size_t s);

    std::size_t size() const { return down_.size(); }
    bool leq(std::size_t i, std::size_t j) const { return contains(down_[j], i); }
    bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }

    /// Principal ideal <i>, including i.
    ElementSet principal(std::size_t i) const { return down_[i]; }
    /// <i> minus i.
    ElementSet strict_principal(std::size_t i) const { return down_[i] & ~singleton(i); }
    /// Elements strictly above i.
    ElementSet strict_upper(std::size_t i) const { return up_[i]; }

    /// Smallest ideal containing every element of `generators`.
    ElementSet ideal(ElementSet generators) const;
    bool is_ideal(ElementSet set) const;
    /// Maximal elements of an ideal; throws NotAnIdeal if `ideal` is not
    /// downward closed.
    ElementSet maximal_elements(ElementSet ideal) const;
    /// maximal_elements without the closure check, for hot loops.
    ElementSet maximal_unchecked(ElementSet set) const;

    bool is_chain() const;
    bool is_antichain() const;

    /// Hasse diagram, lexicographically sorted.
    std::vector<Cover> cover_relations() const;

    /// Reflexivity, antisymmetry and transitivity by exhaustive triple scan.
    bool satisfies_axioms() const;

    friend bool operator==(const Poset& a, const Poset& b) { return a.down_ == b.down_; }

private:
    explicit Poset(std::vector<ElementSet> down);

    std::vector<ElementSet> down_;
    std::vector<ElementSet> up_;
};

/// P ⊎ Q: Q relabelled to s..s+t-1, cross pairs incomparable.
Poset disjoint_union(const Poset& p, const Poset& q);
/// P ⊕ Q: the disjoint union plus x <= y for x in P, y in Q.
Poset linear_sum(const Poset& p, const Poset& q);

/// Index of (i, j) in a product of an s-element and a t-element poset:
/// i * t + j (0-based), i.e. rows of P, columns of Q.
inline std::size_t product_index(std::size_t i, std::size_t j, std::size_t t) { return i * t + j; }

/// P ⊗ Q: (x, y) <= (x', y') iff x <= x' and y <= y'.
Poset cartesian_product(const Poset& p, const Poset& q);
/// P ⋆ Q: (x, y) <= (x', y') iff x < x', or x = x' and y <= y'.
Poset lex_product(const Poset& p, const Poset& q);

/// Deletes z and relabels the rest to 0..s-2, preserving relative order.
Poset puncture(const Poset& p, std::size_t z);
/// Adds an isolated element with label s.
Poset extend(const Poset& p);

} // namespace wpb
