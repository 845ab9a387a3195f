#include "wpb/blockspace.hpp"

#include "wpb/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

namespace wpb {

Labeling::Labeling(std::vector<std::size_t> sizes) : sizes_(std::move(sizes))
{
    offsets_.reserve(sizes_.size());
    for (std::size_t k : sizes_) {
        if (k == 0)
            throw OutOfRange("block sizes must be positive");
        offsets_.push_back(length_);
        length_ += k;
    }
}

Labeling Labeling::uniform(std::size_t s) { return Labeling(std::vector<std::size_t>(s, 1)); }

bool Labeling::is_trivial() const
{
    return std::all_of(sizes_.begin(), sizes_.end(), [](std::size_t k) { return k == 1; });
}

BlockSpace::BlockSpace(Poset poset, Labeling labeling, WeightFn weight)
    : poset_(std::move(poset)), labeling_(std::move(labeling)), weight_(std::move(weight))
{
    if (poset_.size() != labeling_.blocks())
        throw LengthMismatch("poset has " + std::to_string(poset_.size()) +
                             " elements but the labeling has " +
                             std::to_string(labeling_.blocks()) + " blocks");
}

BlockSpace BlockSpace::with_weight(WeightFn weight) const
{
    if (weight.gf().q() != field().q())
        throw FieldMismatch();
    return BlockSpace(poset_, labeling_, std::move(weight));
}

void BlockSpace::check_length(std::span<const Element> u) const
{
    if (u.size() != length())
        throw LengthMismatch("vector of length " + std::to_string(u.size()) +
                             " in a space of length " + std::to_string(length()));
}

ElementSet BlockSpace::block_support(std::span<const Element> u) const
{
    check_length(u);
    ElementSet support = 0;
    for (std::size_t i = 0; i < blocks(); ++i) {
        const auto begin = u.begin() + static_cast<std::ptrdiff_t>(labeling_.offset(i));
        if (std::any_of(begin, begin + static_cast<std::ptrdiff_t>(labeling_.size(i)),
                        [](Element x) { return x != 0; }))
            support |= singleton(i);
    }
    return support;
}

unsigned BlockSpace::block_max_weight(std::span<const Element> u, std::size_t block) const
{
    check_length(u);
    if (block >= blocks())
        throw OutOfRange("block " + std::to_string(block + 1) + " outside " +
                         std::to_string(blocks()) + " blocks");
    unsigned best = 0;
    const std::size_t off = labeling_.offset(block);
    for (std::size_t j = 0; j < labeling_.size(block); ++j)
        best = std::max(best, weight_(u[off + j]));
    return best;
}

ElementSet BlockSpace::support_ideal(std::span<const Element> u) const
{
    return poset_.ideal(block_support(u));
}

unsigned BlockSpace::weight(std::span<const Element> u) const
{
    check_length(u);
    std::array<unsigned, max_poset_size> block_weight{};
    ElementSet support = 0;
    std::size_t pos = 0;
    for (std::size_t i = 0; i < blocks(); ++i) {
        unsigned best = 0;
        for (std::size_t j = 0; j < labeling_.size(i); ++j, ++pos)
            best = std::max(best, weight_(u[pos]));
        block_weight[i] = best;
        if (best != 0)
            support |= singleton(i);
    }
    const ElementSet ideal = poset_.ideal(support);
    const ElementSet maximal = poset_.maximal_unchecked(ideal);
    unsigned total = static_cast<unsigned>(std::popcount(ideal & ~maximal)) * weight_.max_weight();
    for (ElementSet rest = maximal; rest; rest &= rest - 1)
        total += block_weight[std::countr_zero(rest)];
    return total;
}

unsigned BlockSpace::distance(std::span<const Element> u, std::span<const Element> v) const
{
    return weight(sub(u, v));
}

BlockVector BlockSpace::add(std::span<const Element> u, std::span<const Element> v) const
{
    check_length(u);
    check_length(v);
    BlockVector out(length());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = field().add(u[k], v[k]);
    return out;
}

BlockVector BlockSpace::sub(std::span<const Element> u, std::span<const Element> v) const
{
    check_length(u);
    check_length(v);
    BlockVector out(length());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = field().sub(u[k], v[k]);
    return out;
}

BlockVector BlockSpace::neg(std::span<const Element> u) const
{
    check_length(u);
    BlockVector out(length());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = field().neg(u[k]);
    return out;
}

BlockVector BlockSpace::scale(Element c, std::span<const Element> u) const
{
    check_length(u);
    BlockVector out(length());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = field().mul(c, u[k]);
    return out;
}

std::uint64_t BlockSpace::space_size(const Limits& limits) const
{
    const double size = std::pow(static_cast<double>(field().q()), static_cast<double>(length()));
    if (size > static_cast<double>(limits.max_space))
        throw SpaceTooLarge(size, static_cast<double>(limits.max_space));
    return static_cast<std::uint64_t>(std::llround(size));
}

BlockVector BlockSpace::vector_at(std::uint64_t index) const
{
    BlockVector out(length());
    const unsigned q = field().q();
    for (std::size_t k = out.size(); k-- > 0;) {
        out[k] = static_cast<Element>(index % q);
        index /= q;
    }
    return out;
}

std::uint64_t BlockSpace::index_of(std::span<const Element> u) const
{
    check_length(u);
    std::uint64_t index = 0;
    for (Element x : u)
        index = index * field().q() + x;
    return index;
}

std::vector<unsigned> BlockSpace::weight_table(const Limits& limits) const
{
    const std::uint64_t total = space_size(limits);
    std::vector<unsigned> table(total);
    BlockVector v = zero();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        table[idx] = weight(v);
        next_vector(v, field().q());
    }
    return table;
}

std::vector<BlockVector> BlockSpace::ball(std::span<const Element> center, unsigned radius,
                                          const Limits& limits) const
{
    check_length(center);
    const std::uint64_t total = space_size(limits);
    std::vector<BlockVector> out;
    BlockVector v = zero();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (distance(center, v) <= radius)
            out.push_back(v);
        next_vector(v, field().q());
    }
    return out;
}

std::uint64_t BlockSpace::ball_size(std::span<const Element> center, unsigned radius,
                                    const Limits& limits) const
{
    check_length(center);
    const std::uint64_t total = space_size(limits);
    std::uint64_t count = 0;
    BlockVector v = zero();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (distance(center, v) <= radius)
            ++count;
        next_vector(v, field().q());
    }
    return count;
}

} // namespace wpb
