#include "wpb/random.hpp"

#include "wpb/errors.hpp"

namespace wpb {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Code random_linear_code(std::uint64_t seed, const BlockSpace& space, std::size_t dim)
{
    Rng rng(seed);
    return random_linear_code(rng, space, dim);
}

Code random_linear_code(Rng& rng, const BlockSpace& space, std::size_t dim)
{
    const std::size_t n = space.length();
    if (dim > n)
        throw OutOfRange("dimension " + std::to_string(dim) + " exceeds length " + std::to_string(n));
    const unsigned q = space.field().q();
    std::vector<BlockVector> rows;
    while (rows.size() < dim) {
        BlockVector row(n);
        for (auto& x : row)
            x = static_cast<Element>(rng.below(q));
        auto trial = rows;
        trial.push_back(row);
        if (Code::linear(space, trial, Limits{0, 1}).dimension() == trial.size())
            rows = std::move(trial);
    }
    return Code::linear(space, std::move(rows));
}

Poset random_poset(Rng& rng, std::size_t s)
{
    std::vector<Poset::Cover> covers;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j)
            if (rng.chance(50))
                covers.emplace_back(i, j);
    return Poset::from_cover_relations(s, covers);
}

Labeling random_labeling(Rng& rng, std::size_t s, std::size_t max_block)
{
    std::vector<std::size_t> sizes(s);
    for (auto& k : sizes)
        k = rng.between(1, max_block);
    return Labeling(std::move(sizes));
}

WeightFn random_weight(Rng& rng, FieldPtr field, unsigned max_value)
{
    const unsigned q = field->q();
    for (;;) {
        std::vector<unsigned> table(q, 0);
        for (unsigned a = 1; a < q; ++a) {
            const Element na = field->neg(static_cast<Element>(a));
            if (na < a)
                table[a] = table[na];
            else
                table[a] = static_cast<unsigned>(rng.between(1, max_value));
        }
        try {
            return custom_weight(field, std::move(table));
        } catch (const AxiomViolation&) {
        }
    }
}

} // namespace wpb
