#include "wpb/codes.hpp"
#include "wpb/errors.hpp"
#include "wpb/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace wpb;

namespace {

BlockSpace binary(Poset p)
{
    const std::size_t s = p.size();
    return BlockSpace(std::move(p), Labeling::uniform(s), hamming_weight(make_field(2)));
}

Code repetition(Poset p)
{
    return Code::from_words(binary(std::move(p)), {{0, 0, 0}, {1, 1, 1}});
}

Code full_space(const BlockSpace& sp)
{
    std::vector<BlockVector> rows;
    for (std::size_t k = 0; k < sp.length(); ++k) {
        BlockVector r(sp.length(), 0);
        r[k] = 1;
        rows.push_back(r);
    }
    return Code::linear(sp, rows);
}

// Largest r for which radius-r balls around distinct codewords never meet,
// by intersecting explicit ball listings.
unsigned disjoint_ball_radius(const Code& c)
{
    const auto& sp = c.space();
    for (unsigned r = 0;; ++r) {
        std::set<BlockVector> seen;
        for (const auto& w : c.codewords())
            for (const auto& v : sp.ball(w, r))
                if (!seen.insert(v).second)
                    return r - 1;
    }
}

} // namespace

TEST_CASE("code construction")
{
    const auto sp = binary(Poset::chain(3));
    CHECK(Code::linear(sp, {{1, 1, 0}, {0, 1, 1}}).size() == 4);
    const auto rep = repetition(Poset::chain(3));
    CHECK(rep.codewords() == std::vector<BlockVector>{{0, 0, 0}, {1, 1, 1}});
    CHECK_FALSE(rep.is_linear());
    const auto dep = Code::linear(sp, {{1, 1, 0}, {1, 1, 0}});
    CHECK(dep.dimension() == 1);
    CHECK(dep.size() == 2);
    CHECK_THROWS_AS(rep.dimension(), NotLinear);
    CHECK(Code::from_words(sp, {{1, 0, 0}, {0, 0, 0}, {1, 0, 0}}).size() == 2);
    CHECK_THROWS_AS(Code::from_words(sp, {{1, 0}}), LengthMismatch);
}

TEST_CASE("minimum distance")
{
    CHECK(min_distance(repetition(Poset::chain(3))) == 3);
    CHECK(min_distance(repetition(Poset::antichain(3))) == 3);
    const BlockSpace lee(Poset::chain(2), Labeling({2, 1}), lee_weight(make_field(5)));
    const auto c = Code::linear(lee, {{1, 3, 4}});
    CHECK(c.size() == 5);
    CHECK(min_distance(c) == 3);
    CHECK(min_distance_pairwise(c) == 3);
    CHECK_THROWS_AS(min_distance(Code::from_words(lee, {{1, 1, 1}, {1, 1, 1}})), TooFewWords);
}

TEST_CASE("covering radius and cosets")
{
    const auto chain_rep = repetition(Poset::chain(3));
    CHECK(covering_radius(chain_rep) == 2);
    CHECK(covering_radius(repetition(Poset::antichain(3))) == 1);
    const auto sp = binary(Poset::chain(3));
    CHECK(covering_radius(full_space(sp)) == 0);

    const auto lin = Code::linear(sp, {{1, 1, 1}});
    const auto table = coset_table(lin);
    auto w = table.weights;
    std::sort(w.begin(), w.end());
    CHECK(w == std::vector<unsigned>{0, 1, 2, 2});
    CHECK(table.max_weight == 2);
    CHECK(covering_radius(lin) == 2);

    const auto whole = coset_table(full_space(sp));
    CHECK(whole.leaders.size() == 1);
    CHECK(whole.max_weight == 0);

    const auto zero = coset_table(Code::linear(sp, {}));
    CHECK(zero.leaders.size() == 8);
    const auto wt = sp.weight_table();
    CHECK(zero.max_weight == *std::max_element(wt.begin(), wt.end()));
    CHECK_THROWS_AS(coset_table(chain_rep), NotLinear);
}

TEST_CASE("packing radius and perfect codes")
{
    const auto chain_rep = repetition(Poset::chain(3));
    CHECK(packing_radius(chain_rep) == 2);
    CHECK(packing_radius(repetition(Poset::antichain(3))) == 1);
    CHECK(is_r_perfect(chain_rep, 2));
    CHECK_FALSE(is_r_perfect(chain_rep, 1));
    const auto sp = binary(Poset::chain(3));
    CHECK(is_r_perfect(full_space(sp), 0));
    CHECK_THROWS_AS(packing_radius(Code::linear(sp, {})), TooFewWords);
}

TEST_CASE("projections and the trailing index")
{
    const auto rep = repetition(Poset::chain(3));
    CHECK(project(rep, 1) == std::vector<BlockVector>{{0}, {1}});
    CHECK(trailing_full_index(rep) == 2);
    const auto sp = binary(Poset::chain(3));
    CHECK(trailing_full_index(full_space(sp)) == 0);
    CHECK(trailing_full_index(Code::linear(sp, {{1, 0, 0}})) == 3);
    CHECK_THROWS_AS(trailing_full_index(repetition(Poset::antichain(3))), NotAChain);
}

TEST_CASE("max poset weight")
{
    const auto h2 = hamming_weight(make_field(2));
    CHECK(max_poset_weight(repetition(Poset::chain(3)), h2) == 3);
    const auto sp = binary(Poset::chain(3));
    CHECK(max_poset_weight(Code::linear(sp, {}), h2) == 0);
    const BlockSpace blocks(Poset::chain(2), Labeling({2, 1}), h2);
    CHECK(max_poset_weight(Code::linear(blocks, {{1, 1, 0}}), h2) == 1);
}

TEST_CASE("random linear codes")
{
    const BlockSpace sp(Poset::chain(2), Labeling({2, 2}), hamming_weight(make_field(3)));
    const auto a = random_linear_code(42, sp, 2);
    const auto b = random_linear_code(42, sp, 2);
    CHECK(a.generator() == b.generator());
    CHECK(a.dimension() == 2);
    CHECK(random_linear_code(1, sp, 0).size() == 1);
    CHECK(random_linear_code(1, sp, 4).size() == 81);
    CHECK_THROWS_AS(random_linear_code(1, sp, 5), OutOfRange);
}

TEST_CASE("code invariants on random instances")
{
    Rng rng(77);
    int linear_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const unsigned q = trial % 2 ? 2 : 3;
        const auto f = make_field(q);
        const WeightFn w = trial % 3 == 0 ? lee_weight(f) : trial % 3 == 1 ? hamming_weight(f) : random_weight(rng, f);
        const std::size_t s = rng.between(1, 4);
        Labeling lab = random_labeling(rng, s, 2);
        if (lab.length() > (q == 2 ? 8u : 5u))
            continue;
        const BlockSpace sp(random_poset(rng, s), lab, w);
        const Code c = random_linear_code(rng, sp, rng.between(1, lab.length()));
        CAPTURE(trial);
        ++linear_seen;
        CHECK(covering_radius(c) == coset_table(c).max_weight);
        for (std::uint64_t i = 0; i < sp.space_size(); i += 3) {
            const auto v = sp.vector_at(i);
            CHECK(c.contains(c.reduce(v)) == c.contains(v));
            CHECK(coset_index(c, v) == coset_index(c, c.reduce(v)));
        }
        if (c.size() < 2)
            continue;
        CHECK(min_distance(c) == min_distance_pairwise(c));
        const unsigned rho = packing_radius(c);
        CHECK(rho < min_distance(c));
        CHECK(rho == disjoint_ball_radius(c));

        // Explicit copy of the same words must agree.
        const Code list = Code::from_words(sp, c.codewords());
        CHECK(covering_radius(list) == covering_radius(c));
        CHECK(packing_radius(list) == rho);
    }
    CHECK(linear_seen > 40);
}
