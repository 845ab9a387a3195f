#include "wpb/constructions.hpp"
#include "wpb/errors.hpp"
#include "wpb/random.hpp"

#include <doctest.h>

#include <algorithm>

using namespace wpb;

namespace {

BlockSpace binary_chain(std::size_t s)
{
    return BlockSpace(Poset::chain(s), Labeling::uniform(s), hamming_weight(make_field(2)));
}

Code words(BlockSpace sp, std::vector<BlockVector> w)
{
    return Code::from_words(std::move(sp), std::move(w));
}

std::vector<BlockVector> sorted(std::vector<BlockVector> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("labeling combinators")
{
    CHECK(direct_sum_labeling(Labeling({2, 1}), Labeling({1, 3})).sizes() == std::vector<std::size_t>{2, 1, 1, 3});
    CHECK(direct_sum_labeling(Labeling({1}), Labeling({1})).sizes() == std::vector<std::size_t>{1, 1});
    CHECK(direct_sum_labeling(Labeling({1, 2}), Labeling({4})).length() == 7);
    CHECK(tensor_labeling(Labeling({2, 1}), Labeling({1, 3})).sizes() == std::vector<std::size_t>{2, 6, 1, 3});
    CHECK(tensor_labeling(Labeling::uniform(2), Labeling::uniform(3)) == Labeling::uniform(6));
    CHECK(tensor_labeling(Labeling({1, 2}), Labeling({1, 1, 2})).length() == 12);
    CHECK(extended_labeling(Labeling({2})).sizes() == std::vector<std::size_t>{2, 1});
    CHECK(punctured_labeling(Labeling({2, 1, 3}), 1).sizes() == std::vector<std::size_t>{2, 3});
}

TEST_CASE("direct sum of the worked pair")
{
    const auto c1 = words(binary_chain(2), {{0, 0}, {1, 1}});
    const auto c2 = words(binary_chain(1), {{0}, {1}});
    const auto dis = direct_sum_code(c1, c2, SumOrder::disjoint);
    CHECK(dis.code.size() == 4);
    CHECK(min_distance(dis.code) == 1);
    CHECK(dis.space().poset() == disjoint_union(Poset::chain(2), Poset::chain(1)));
    const auto lin = direct_sum_code(c1, c2, SumOrder::linear);
    CHECK(min_distance(lin.code) == 2);
    CHECK(lin.space().poset() == Poset::chain(3));

    const BlockSpace g3(Poset::chain(1), Labeling::uniform(1), hamming_weight(make_field(3)));
    CHECK_THROWS_AS(direct_sum_code(c1, words(g3, {{0}, {1}}), SumOrder::disjoint), FieldMismatch);
    const auto f2 = make_field(2);
    const BlockSpace other(Poset::chain(1), Labeling::uniform(1), custom_weight(f2, {0, 2}));
    CHECK_THROWS_AS(direct_sum_code(c1, words(other, {{0}, {1}}), SumOrder::disjoint), WeightMismatch);
}

TEST_CASE("direct sum of linear codes stays linear")
{
    const auto sp = binary_chain(2);
    const auto a = Code::linear(sp, {{1, 1}});
    const auto b = Code::linear(binary_chain(1), {{1}});
    CHECK(direct_sum_code(a, b, SumOrder::linear).code.is_linear());
    CHECK(direct_sum_code(a, b, SumOrder::linear).code.dimension() == 2);
}

TEST_CASE("plotkin construction")
{
    const auto c1 = words(binary_chain(2), {{0, 0}, {1, 1}});
    const auto c2 = words(binary_chain(2), {{0, 0}, {0, 1}});
    const auto r = plotkin_code(c1, c2, SumOrder::disjoint);
    CHECK(r.code.codewords() == sorted({{0, 0, 0, 0}, {0, 0, 0, 1}, {1, 1, 1, 1}, {1, 1, 1, 0}}));
    // d(C1) = 2, d(C2) = 2 with the chain weights; the sum code reaches 2.
    CHECK(min_distance(c1) == 2);
    CHECK(min_distance(c2) == 2);
    CHECK(min_distance(r.code) == 2);
    CHECK(min_distance(r.code) >= std::min(min_distance(c1), min_distance(c2)));
    CHECK_THROWS_AS(plotkin_code(c1, words(binary_chain(3), {{0, 0, 0}}), SumOrder::disjoint), LengthMismatch);
}

TEST_CASE("extended code")
{
    const auto c = words(binary_chain(2), {{0, 0}, {1, 1}});
    const auto e = extended_code(c);
    CHECK(e.code.codewords() == sorted({{0, 0, 0}, {1, 1, 0}}));
    CHECK(e.space().poset() == extend(Poset::chain(2)));
    const unsigned d = min_distance(c), dh = min_distance(e.code), M = 1;
    CHECK(d <= dh);
    CHECK(dh <= d + M);

    const BlockSpace g3(Poset::chain(1), Labeling::uniform(1), hamming_weight(make_field(3)));
    const auto full = words(g3, {{0}, {1}, {2}});
    const auto e3 = extended_code(full);
    CHECK(e3.code.codewords() == sorted({{0, 0}, {1, 2}, {2, 1}}));
    CHECK(min_distance(full) <= min_distance(e3.code));
    CHECK(min_distance(e3.code) <= min_distance(full) + 1);
}

TEST_CASE("punctured code")
{
    const auto c = words(binary_chain(3), {{0, 0, 0}, {1, 1, 1}});
    const auto p = punctured_code(c, 2);
    CHECK(p.code.codewords() == sorted({{0, 0}, {1, 1}}));
    CHECK(min_distance(p.code) == 2);
    CHECK(min_distance(p.code) <= min_distance(c));
    CHECK(p.space().poset() == Poset::chain(2));
    CHECK_THROWS_AS(punctured_code(c, 3), OutOfRange);
    CHECK_THROWS_AS(punctured_code(words(binary_chain(1), {{0}, {1}}), 0), OutOfRange);

    const BlockSpace anti(Poset::antichain(3), Labeling::uniform(3), hamming_weight(make_field(2)));
    const auto z = words(anti, {{0, 0, 0}, {1, 1, 0}});
    CHECK(min_distance(punctured_code(z, 2).code) == min_distance(z));
    CHECK(puncture_vector(Labeling({2, 1}), BlockVector{4, 1, 3}, 0) == BlockVector{3});
}

TEST_CASE("tensor vectors")
{
    const auto f2 = make_field(2);
    CHECK(tensor_vector(*f2, Labeling::uniform(2), BlockVector{1, 1}, Labeling::uniform(2), BlockVector{1, 1}) ==
          BlockVector{1, 1, 1, 1});
    CHECK(tensor_vector(*f2, Labeling::uniform(2), BlockVector{0, 0}, Labeling::uniform(2), BlockVector{1, 1}) ==
          BlockVector{0, 0, 0, 0});
    const auto f5 = make_field(5);
    CHECK(tensor_vector(*f5, Labeling({1, 1}), BlockVector{2, 3}, Labeling({2}), BlockVector{1, 4}) ==
          BlockVector{2, 3, 3, 2});

    // Naive double loop over a mixed labeling.
    const Labeling la({2, 1}), lb({1, 2});
    const BlockVector u{1, 2, 4}, v{3, 1, 2};
    const auto t = tensor_vector(*f5, la, u, lb, v);
    BlockVector expect;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t a = 0; a < la.size(i); ++a)
                for (std::size_t b = 0; b < lb.size(j); ++b)
                    expect.push_back(f5->mul(u[la.offset(i) + a], v[lb.offset(j) + b]));
    CHECK(t == expect);
}

TEST_CASE("tensor codes of repetition pairs")
{
    const auto c = words(binary_chain(2), {{0, 0}, {1, 1}});
    const auto car = tensor_code(c, c, ProductOrder::cartesian);
    CHECK(car.code.codewords() == sorted({{0, 0, 0, 0}, {1, 1, 1, 1}}));
    CHECK(car.space().weight(BlockVector{1, 1, 1, 1}) == 4);
    CHECK(car.code.size() <= c.size() * c.size());
    CHECK_FALSE(car.code.is_linear());

    const BlockSpace anti(Poset::antichain(2), Labeling::uniform(2), hamming_weight(make_field(2)));
    const auto ca = words(anti, {{0, 0}, {1, 1}});
    CHECK(min_distance(tensor_code(ca, ca, ProductOrder::cartesian).code) == 4);
    const auto lex = tensor_code(c, c, ProductOrder::lex);
    CHECK(lex.space().poset() == Poset::chain(4));
}

TEST_CASE("construction inequalities on random codes")
{
    Rng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned q = trial % 2 ? 2 : 3;
        const auto f = make_field(q);
        const WeightFn w = trial % 4 == 0 ? random_weight(rng, f) : hamming_weight(f);
        const std::size_t s = rng.between(2, 3);
        const Labeling lab = random_labeling(rng, s, q == 2 ? 2 : 1);
        const BlockSpace sp(random_poset(rng, s), lab, w);
        const Code c = random_linear_code(rng, sp, rng.between(1, lab.length()));
        CAPTURE(trial);

        const auto ext = extended_code(c).code;
        const unsigned M = w.max_weight();
        CHECK(covering_radius(c) <= covering_radius(ext));
        CHECK(covering_radius(ext) <= covering_radius(c) + M);

        const std::size_t b = rng.below(s);
        const auto pun = punctured_code(c, b).code;
        CHECK(covering_radius(pun) <= covering_radius(c));
        for (const auto& u : c.codewords())
            CHECK(pun.space().weight(puncture_vector(lab, u, b)) <= sp.weight(u));
        if (c.size() >= 2) {
            CHECK(min_distance(c) <= min_distance(ext));
            CHECK(min_distance(ext) <= min_distance(c) + M);
        }
    }
}
