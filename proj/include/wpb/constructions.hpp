#pragma once

#include "wpb/codes.hpp"

#include <string>

namespace wpb {

/// How the two posets of a two-code construction are joined.
enum class SumOrder { disjoint, linear };
/// Poset product used by the tensor construction.
enum class ProductOrder { cartesian, lex };

const char* to_string(SumOrder order);
const char* to_string(ProductOrder order);

struct ConstructionResult {
    Code code;
    /// e.g. "plotkin(linear)" or "puncture(block 2)".
    std::string provenance;

    const BlockSpace& space() const { return code.space(); }
};

/// Concatenation of block sizes.
Labeling direct_sum_labeling(const Labeling& a, const Labeling& b);
/// Appends one block of size 1.
Labeling extended_labeling(const Labeling& a);
/// Drops block `block`.
Labeling punctured_labeling(const Labeling& a, std::size_t block);
/// Sizes α_i β_j at product_index(i, j, t).
Labeling tensor_labeling(const Labeling& a, const Labeling& b);

/// {(u', u'')} over P ⊎ Q or P ⊕ Q with labeling π1 ⊕ π2.
ConstructionResult direct_sum_code(const Code& c1, const Code& c2, SumOrder order);
/// {(u', u' + u'')}; needs n1 = n2.
ConstructionResult plotkin_code(const Code& c1, const Code& c2, SumOrder order);
/// Appends one symbol making the sum of all coordinates zero; the new
/// block is an isolated poset element of size 1.
ConstructionResult extended_code(const Code& c);
/// Deletes block `block` (0-based) from every word; needs s >= 2.
ConstructionResult punctured_code(const Code& c, std::size_t block);

/// u with block `block` removed.
BlockVector puncture_vector(const Labeling& labeling, std::span<const Element> u, std::size_t block);

/// u ⊗ v laid out block by block: block (i, j) holds u_{iς} v_{jμ} with ς
/// outer and μ inner.
BlockVector tensor_vector(const Field& field, const Labeling& a, std::span<const Element> u,
                          const Labeling& b, std::span<const Element> v);
/// The set {u ⊗ v : u in C1, v in C2} as an explicit code, or its linear
/// span when `span` is set.
ConstructionResult tensor_code(const Code& c1, const Code& c2, ProductOrder order,
                               bool span = false);

} // namespace wpb
