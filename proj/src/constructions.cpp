#include "wpb/constructions.hpp"

#include "wpb/errors.hpp"

namespace wpb {

const char* to_string(SumOrder order)
{
    return order == SumOrder::disjoint ? "disjoint" : "linear";
}

const char* to_string(ProductOrder order)
{
    return order == ProductOrder::cartesian ? "cartesian" : "lex";
}

namespace {

void check_compatible(const Code& a, const Code& b)
{
    if (a.space().field().q() != b.space().field().q())
        throw FieldMismatch();
    if (!(a.space().weight_fn() == b.space().weight_fn()))
        throw WeightMismatch();
}

BlockVector concat(std::span<const Element> a, std::span<const Element> b)
{
    BlockVector out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

BlockSpace sum_space(const Code& c1, const Code& c2, SumOrder order)
{
    const BlockSpace& s1 = c1.space();
    const BlockSpace& s2 = c2.space();
    Poset p = order == SumOrder::disjoint ? disjoint_union(s1.poset(), s2.poset())
                                          : linear_sum(s1.poset(), s2.poset());
    return BlockSpace(std::move(p), direct_sum_labeling(s1.labeling(), s2.labeling()),
                      s1.weight_fn());
}

} // namespace

Labeling direct_sum_labeling(const Labeling& a, const Labeling& b)
{
    std::vector<std::size_t> sizes = a.sizes();
    sizes.insert(sizes.end(), b.sizes().begin(), b.sizes().end());
    return Labeling(std::move(sizes));
}

Labeling extended_labeling(const Labeling& a)
{
    std::vector<std::size_t> sizes = a.sizes();
    sizes.push_back(1);
    return Labeling(std::move(sizes));
}

Labeling punctured_labeling(const Labeling& a, std::size_t block)
{
    if (block >= a.blocks())
        throw OutOfRange("block " + std::to_string(block + 1) + " outside " +
                         std::to_string(a.blocks()) + " blocks");
    std::vector<std::size_t> sizes = a.sizes();
    sizes.erase(sizes.begin() + static_cast<std::ptrdiff_t>(block));
    return Labeling(std::move(sizes));
}

Labeling tensor_labeling(const Labeling& a, const Labeling& b)
{
    std::vector<std::size_t> sizes(a.blocks() * b.blocks());
    for (std::size_t i = 0; i < a.blocks(); ++i)
        for (std::size_t j = 0; j < b.blocks(); ++j)
            sizes[product_index(i, j, b.blocks())] = a.size(i) * b.size(j);
    return Labeling(std::move(sizes));
}

ConstructionResult direct_sum_code(const Code& c1, const Code& c2, SumOrder order)
{
    check_compatible(c1, c2);
    BlockSpace space = sum_space(c1, c2, order);
    const std::string tag = std::string("direct-sum(") + to_string(order) + ")";
    const std::size_t n1 = c1.space().length(), n2 = c2.space().length();
    if (c1.is_linear() && c2.is_linear()) {
        std::vector<BlockVector> rows;
        for (const auto& g : c1.generator())
            rows.push_back(concat(g, BlockVector(n2, 0)));
        for (const auto& g : c2.generator())
            rows.push_back(concat(BlockVector(n1, 0), g));
        return {Code::linear(std::move(space), std::move(rows)), tag};
    }
    std::vector<BlockVector> words;
    for (const auto& a : c1.codewords())
        for (const auto& b : c2.codewords())
            words.push_back(concat(a, b));
    return {Code::from_words(std::move(space), std::move(words)), tag};
}

ConstructionResult plotkin_code(const Code& c1, const Code& c2, SumOrder order)
{
    check_compatible(c1, c2);
    const std::size_t n = c1.space().length();
    if (c2.space().length() != n)
        throw LengthMismatch("Plotkin construction needs equal lengths, got " + std::to_string(n) +
                             " and " + std::to_string(c2.space().length()));
    BlockSpace space = sum_space(c1, c2, order);
    const Field& f = space.field();
    const std::string tag = std::string("plotkin(") + to_string(order) + ")";
    auto pair = [&](std::span<const Element> a, std::span<const Element> b) {
        BlockVector out(a.begin(), a.end());
        for (std::size_t k = 0; k < n; ++k)
            out.push_back(f.add(a[k], b[k]));
        return out;
    };
    if (c1.is_linear() && c2.is_linear()) {
        std::vector<BlockVector> rows;
        for (const auto& g : c1.generator())
            rows.push_back(pair(g, BlockVector(n, 0)));
        for (const auto& g : c2.generator())
            rows.push_back(pair(BlockVector(n, 0), g));
        return {Code::linear(std::move(space), std::move(rows)), tag};
    }
    std::vector<BlockVector> words;
    for (const auto& a : c1.codewords())
        for (const auto& b : c2.codewords())
            words.push_back(pair(a, b));
    return {Code::from_words(std::move(space), std::move(words)), tag};
}

ConstructionResult extended_code(const Code& c)
{
    const BlockSpace& s = c.space();
    BlockSpace space(extend(s.poset()), extended_labeling(s.labeling()), s.weight_fn());
    const Field& f = s.field();
    auto parity = [&](const BlockVector& u) {
        Element sum = 0;
        for (Element x : u)
            sum = f.add(sum, x);
        BlockVector out = u;
        out.push_back(f.neg(sum));
        return out;
    };
    if (c.is_linear()) {
        std::vector<BlockVector> rows;
        for (const auto& g : c.generator())
            rows.push_back(parity(g));
        return {Code::linear(std::move(space), std::move(rows)), "extend"};
    }
    std::vector<BlockVector> words;
    for (const auto& u : c.codewords())
        words.push_back(parity(u));
    return {Code::from_words(std::move(space), std::move(words)), "extend"};
}

BlockVector puncture_vector(const Labeling& labeling, std::span<const Element> u, std::size_t block)
{
    if (block >= labeling.blocks())
        throw OutOfRange("block " + std::to_string(block + 1) + " outside " +
                         std::to_string(labeling.blocks()) + " blocks");
    if (u.size() != labeling.length())
        throw LengthMismatch("vector length does not match the labeling");
    const std::size_t from = labeling.offset(block);
    const std::size_t to = from + labeling.size(block);
    BlockVector out(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(from));
    out.insert(out.end(), u.begin() + static_cast<std::ptrdiff_t>(to), u.end());
    return out;
}

ConstructionResult punctured_code(const Code& c, std::size_t block)
{
    const BlockSpace& s = c.space();
    if (s.blocks() < 2)
        throw OutOfRange("puncturing needs at least two blocks");
    BlockSpace space(puncture(s.poset(), block), punctured_labeling(s.labeling(), block),
                     s.weight_fn());
    const std::string tag = "puncture(block " + std::to_string(block + 1) + ")";
    if (c.is_linear()) {
        std::vector<BlockVector> rows;
        for (const auto& g : c.generator())
            rows.push_back(puncture_vector(s.labeling(), g, block));
        return {Code::linear(std::move(space), std::move(rows)), tag};
    }
    std::vector<BlockVector> words;
    for (const auto& u : c.codewords())
        words.push_back(puncture_vector(s.labeling(), u, block));
    return {Code::from_words(std::move(space), std::move(words)), tag};
}

BlockVector tensor_vector(const Field& field, const Labeling& a, std::span<const Element> u,
                          const Labeling& b, std::span<const Element> v)
{
    if (u.size() != a.length() || v.size() != b.length())
        throw LengthMismatch("tensor factor length does not match its labeling");
    const Labeling out_lab = tensor_labeling(a, b);
    BlockVector out(out_lab.length());
    for (std::size_t i = 0; i < a.blocks(); ++i)
        for (std::size_t j = 0; j < b.blocks(); ++j) {
            std::size_t pos = out_lab.offset(product_index(i, j, b.blocks()));
            for (std::size_t x = 0; x < a.size(i); ++x)
                for (std::size_t y = 0; y < b.size(j); ++y)
                    out[pos++] = field.mul(u[a.offset(i) + x], v[b.offset(j) + y]);
        }
    return out;
}

ConstructionResult tensor_code(const Code& c1, const Code& c2, ProductOrder order, bool span)
{
    check_compatible(c1, c2);
    const BlockSpace& s1 = c1.space();
    const BlockSpace& s2 = c2.space();
    Poset p = order == ProductOrder::cartesian ? cartesian_product(s1.poset(), s2.poset())
                                               : lex_product(s1.poset(), s2.poset());
    BlockSpace space(std::move(p), tensor_labeling(s1.labeling(), s2.labeling()), s1.weight_fn());
    const Field& f = s1.field();
    std::string tag = std::string("tensor(") + to_string(order) + (span ? ",span)" : ")");
    std::vector<BlockVector> words;
    for (const auto& u : c1.codewords())
        for (const auto& v : c2.codewords())
            words.push_back(tensor_vector(f, s1.labeling(), u, s2.labeling(), v));
    if (span)
        return {Code::linear(std::move(space), std::move(words)), std::move(tag)};
    return {Code::from_words(std::move(space), std::move(words)), std::move(tag)};
}

} // namespace wpb
