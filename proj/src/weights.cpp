#include "wpb/weights.hpp"

#include "wpb/errors.hpp"

#include <algorithm>

namespace wpb {

const char* to_string(WeightAxiom axiom)
{
    switch (axiom) {
    case WeightAxiom::length:
        return "length";
    case WeightAxiom::zero:
        return "zero";
    case WeightAxiom::positivity:
        return "positivity";
    case WeightAxiom::symmetry:
        return "symmetry";
    case WeightAxiom::triangle:
        return "triangle";
    }
    return "?";
}

WeightFn::WeightFn(FieldPtr field, Kind kind, std::vector<unsigned> table)
    : field_(std::move(field)), kind_(kind), table_(std::move(table))
{
    const Field& f = *field_;
    if (table_.size() != f.q())
        throw AxiomViolation(WeightAxiom::length, static_cast<unsigned>(table_.size()), f.q());
    if (table_[0] != 0)
        throw AxiomViolation(WeightAxiom::zero, 0, 0);
    for (unsigned a = 1; a < f.q(); ++a)
        if (table_[a] == 0)
            throw AxiomViolation(WeightAxiom::positivity, a, a);
    for (unsigned a = 1; a < f.q(); ++a)
        if (table_[a] != table_[f.neg(static_cast<Element>(a))])
            throw AxiomViolation(WeightAxiom::symmetry, a, f.neg(static_cast<Element>(a)));
    for (unsigned a = 0; a < f.q(); ++a)
        for (unsigned b = 0; b < f.q(); ++b)
            if (table_[f.add(static_cast<Element>(a), static_cast<Element>(b))] >
                table_[a] + table_[b])
                throw AxiomViolation(WeightAxiom::triangle, a, b);

    auto max_it = std::max_element(table_.begin(), table_.end());
    max_ = *max_it;
    argmax_ = static_cast<Element>(max_it - table_.begin());
    auto min_it = std::min_element(table_.begin() + 1, table_.end());
    min_ = *min_it;
    argmin_ = static_cast<Element>(min_it - table_.begin());
}

std::string WeightFn::name() const
{
    switch (kind_) {
    case Kind::hamming:
        return "hamming";
    case Kind::lee:
        return "lee";
    case Kind::table:
        return "table";
    }
    return "table";
}

WeightFn hamming_weight(FieldPtr field)
{
    std::vector<unsigned> table(field->q(), 1);
    table[0] = 0;
    return WeightFn(std::move(field), WeightFn::Kind::hamming, std::move(table));
}

WeightFn lee_weight(FieldPtr field)
{
    if (!field->is_prime())
        throw LeeRequiresPrimeField(field->q());
    const unsigned q = field->q();
    std::vector<unsigned> table(q);
    for (unsigned a = 0; a < q; ++a)
        table[a] = std::min(a, q - a);
    return WeightFn(std::move(field), WeightFn::Kind::lee, std::move(table));
}

WeightFn custom_weight(FieldPtr field, std::vector<unsigned> table)
{
    return WeightFn(std::move(field), WeightFn::Kind::table, std::move(table));
}

} // namespace wpb
