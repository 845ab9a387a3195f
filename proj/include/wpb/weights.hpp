#pragma once

#include "wpb/field.hpp"

#include <string>
#include <vector>

namespace wpb {

/// A coordinate weight w: GF(q) -> N, stored as a table indexed by the
/// element encoding. Construction guarantees w(0) = 0, w(a) > 0 for a != 0,
/// w(a) = w(-a) and w(a + b) <= w(a) + w(b).
class WeightFn {
public:
    enum class Kind { hamming, lee, table };

    const FieldPtr& field() const { return field_; }
    const Field& gf() const { return *field_; }
    Kind kind() const { return kind_; }
    std::string name() const;

    unsigned operator()(Element a) const { return table_[a]; }
    const std::vector<unsigned>& table() const { return table_; }

    /// Largest value over the alphabet.
    unsigned max_weight() const { return max_; }
    /// Smallest value over the nonzero symbols.
    unsigned min_weight() const { return min_; }
    /// Some element attaining max_weight(); the smallest such encoding.
    Element max_element() const { return argmax_; }
    /// Some nonzero element attaining min_weight(); the smallest such encoding.
    Element min_element() const { return argmin_; }

    /// Same field and same table; the kind tag does not matter.
    friend bool operator==(const WeightFn& a, const WeightFn& b)
    {
        return a.field_->q() == b.field_->q() && a.table_ == b.table_;
    }

private:
    friend WeightFn hamming_weight(FieldPtr);
    friend WeightFn lee_weight(FieldPtr);
    friend WeightFn custom_weight(FieldPtr, std::vector<unsigned>);
    WeightFn(FieldPtr field, Kind kind, std::vector<unsigned> table);

    FieldPtr field_;
    Kind kind_;
    std::vector<unsigned> table_;
    unsigned max_ = 0;
    unsigned min_ = 0;
    Element argmax_ = 0;
    Element argmin_ = 0;
};

WeightFn hamming_weight(FieldPtr field);

/// min(a, q - a) under the residue encoding; prime fields only.
WeightFn lee_weight(FieldPtr field);

/// Validates the table exhaustively over all q^2 pairs. Throws AxiomViolation
/// naming the first failing axiom and witness in the order: length, zero,
/// positivity, symmetry, triangle.
WeightFn custom_weight(FieldPtr field, std::vector<unsigned> table);

} // namespace wpb
