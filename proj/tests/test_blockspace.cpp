#include "wpb/blockspace.hpp"
#include "wpb/errors.hpp"
#include "wpb/random.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace wpb;

namespace {

BlockSpace lee_blocks(Poset p)
{
    return BlockSpace(std::move(p), Labeling({2, 1}), lee_weight(make_field(5)));
}

// Weight straight from the definition, using only leq() and the table.
unsigned naive_weight(const BlockSpace& sp, const BlockVector& u)
{
    const auto& p = sp.poset();
    const auto& lab = sp.labeling();
    const auto& w = sp.weight_fn();
    const std::size_t s = p.size();
    std::vector<bool> supp(s, false), ideal(s, false);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t c = 0; c < lab.size(i); ++c)
            if (u[lab.offset(i) + c] != 0)
                supp[i] = true;
    for (std::size_t j = 0; j < s; ++j)
        for (std::size_t i = 0; i < s; ++i)
            if (supp[i] && p.leq(j, i))
                ideal[j] = true;
    unsigned total = 0;
    for (std::size_t j = 0; j < s; ++j) {
        if (!ideal[j])
            continue;
        bool maximal = true;
        for (std::size_t i = 0; i < s; ++i)
            if (ideal[i] && i != j && p.leq(j, i))
                maximal = false;
        if (!maximal) {
            total += w.max_weight();
            continue;
        }
        unsigned top = 0;
        for (std::size_t c = 0; c < lab.size(j); ++c)
            top = std::max(top, w(u[lab.offset(j) + c]));
        total += top;
    }
    return total;
}

BlockSpace random_small_space(Rng& rng)
{
    static const unsigned qs[] = {2, 3, 4, 5, 7};
    const unsigned q = qs[rng.below(5)];
    const auto f = make_field(q);
    const auto roll = rng.below(3);
    WeightFn w = roll == 0 ? hamming_weight(f) : roll == 1 && f->is_prime() ? lee_weight(f) : random_weight(rng, f);
    for (;;) {
        const std::size_t s = rng.between(1, 4);
        Labeling lab = random_labeling(rng, s, 2);
        if (std::pow(q, lab.length()) <= 2500)
            return BlockSpace(random_poset(rng, s), lab, w);
    }
}

} // namespace

TEST_CASE("labeling")
{
    const Labeling l({2, 1, 3});
    CHECK(l.length() == 6);
    CHECK(l.offset(2) == 3);
    CHECK_FALSE(l.is_trivial());
    CHECK(Labeling::uniform(3).is_trivial());
    CHECK_THROWS_AS(Labeling({1, 0}), OutOfRange);
}

TEST_CASE("block support and block maxima")
{
    const auto sp = lee_blocks(Poset::chain(2));
    CHECK(sp.block_support(BlockVector{0, 0, 0}) == 0);
    CHECK(sp.block_support(BlockVector{1, 3, 0}) == 0b01);
    CHECK(sp.block_support(BlockVector{0, 0, 4}) == 0b10);
    CHECK(sp.block_max_weight(BlockVector{1, 3, 0}, 0) == 2);
    CHECK(sp.block_max_weight(BlockVector{1, 3, 0}, 1) == 0);
    const auto h = sp.with_weight(hamming_weight(make_field(5)));
    CHECK(h.block_max_weight(BlockVector{0, 4, 0}, 0) == 1);
    CHECK_THROWS_AS(sp.weight(BlockVector{1, 2}), LengthMismatch);
}

TEST_CASE("weights of the worked vectors")
{
    const auto chain = lee_blocks(Poset::chain(2));
    CHECK(chain.weight(BlockVector{1, 3, 0}) == 2);
    CHECK(chain.weight(BlockVector{0, 0, 4}) == 3);
    CHECK(chain.support_ideal(BlockVector{0, 0, 4}) == 0b11);
    const auto anti = lee_blocks(Poset::antichain(2));
    CHECK(anti.weight(BlockVector{1, 3, 4}) == 3);
}

TEST_CASE("distances")
{
    const auto f2 = make_field(2);
    const BlockSpace c3(Poset::chain(3), Labeling::uniform(3), hamming_weight(f2));
    CHECK(c3.distance(BlockVector{1, 0, 1}, BlockVector{1, 0, 1}) == 0);
    CHECK(c3.distance(BlockVector{0, 0, 0}, BlockVector{1, 1, 1}) == 3);
    const BlockSpace a2(Poset::antichain(2), Labeling::uniform(2), hamming_weight(f2));
    CHECK(a2.distance(BlockVector{0, 1}, BlockVector{1, 0}) == 2);
}

TEST_CASE("ball around zero, Lee over a 2-chain")
{
    const BlockSpace sp(Poset::chain(2), Labeling::uniform(2), lee_weight(make_field(5)));
    const auto b = sp.ball(sp.zero(), 2);
    REQUIRE(b.size() == 5);
    for (unsigned a = 0; a < 5; ++a)
        CHECK(b[a] == BlockVector{static_cast<Element>(a), 0});
    CHECK(sp.ball(BlockVector{3, 1}, 0) == std::vector<BlockVector>{{3, 1}});
    for (std::uint64_t i = 0; i < 25; ++i)
        for (unsigned r = 0; r <= 4; ++r)
            CHECK(sp.ball_size(sp.vector_at(i), r) == sp.ball_size(sp.zero(), r));
}

TEST_CASE("enumeration order and limits")
{
    const BlockSpace sp(Poset::antichain(3), Labeling::uniform(3), hamming_weight(make_field(3)));
    CHECK(sp.vector_at(0) == BlockVector{0, 0, 0});
    CHECK(sp.vector_at(1) == BlockVector{0, 0, 1});
    CHECK(sp.vector_at(3) == BlockVector{0, 1, 0});
    for (std::uint64_t i = 0; i < 27; ++i)
        CHECK(sp.index_of(sp.vector_at(i)) == i);
    Limits tight;
    tight.max_space = 26;
    CHECK_THROWS_AS(sp.space_size(tight), SpaceTooLarge);
    CHECK_THROWS_AS(sp.ball(sp.zero(), 1, tight), SpaceTooLarge);
    CHECK(sp.space_size() == 27);
}

TEST_CASE("weight matches the definition on random spaces")
{
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const auto sp = random_small_space(rng);
        const auto table = sp.weight_table();
        const unsigned bound = static_cast<unsigned>(sp.blocks()) * sp.weight_fn().max_weight();
        CAPTURE(trial);
        for (std::uint64_t i = 0; i < table.size(); ++i) {
            const auto u = sp.vector_at(i);
            REQUIRE(table[i] == naive_weight(sp, u));
            REQUIRE(sp.weight(u) == table[i]);
            REQUIRE(sp.weight(sp.neg(u)) == table[i]);
            if (i != 0) {
                REQUIRE(table[i] > 0);
                REQUIRE(table[i] <= bound);
            }
        }
    }
}

TEST_CASE("metric axioms by triple scan")
{
    Rng rng(99);
    int scanned = 0;
    for (int trial = 0; trial < 200 && scanned < 25; ++trial) {
        const auto sp = random_small_space(rng);
        const auto n = sp.space_size();
        if (n > 81)
            continue;
        ++scanned;
        for (std::uint64_t a = 0; a < n; ++a) {
            const auto u = sp.vector_at(a);
            REQUIRE(sp.distance(u, u) == 0);
            for (std::uint64_t b = 0; b < n; ++b) {
                const auto v = sp.vector_at(b);
                const unsigned duv = sp.distance(u, v);
                REQUIRE(duv == sp.distance(v, u));
                REQUIRE((duv == 0) == (a == b));
                for (std::uint64_t c = 0; c < n; ++c) {
                    const auto x = sp.vector_at(c);
                    REQUIRE(duv <= sp.distance(u, x) + sp.distance(x, v));
                }
            }
        }
    }
    CHECK(scanned == 25);
}

TEST_CASE("ball sizes agree with the weight table")
{
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sp = random_small_space(rng);
        const auto table = sp.weight_table();
        const unsigned top = *std::max_element(table.begin(), table.end());
        for (unsigned r = 0; r <= top; ++r) {
            const auto expected = std::count_if(table.begin(), table.end(), [&](unsigned w) { return w <= r; });
            CHECK(sp.ball_size(sp.zero(), r) == static_cast<std::uint64_t>(expected));
        }
    }
}

TEST_CASE("threaded scans match serial ones")
{
    const BlockSpace sp(Poset::from_cover_relations(4, {{0, 2}, {1, 2}}), Labeling({2, 1, 2, 1}),
                        lee_weight(make_field(3)));
    Limits par;
    par.threads = 4;
    CHECK(sp.weight_table(par) == sp.weight_table());
    CHECK(sp.ball(BlockVector{1, 0, 2, 0, 0, 1}, 3, par) == sp.ball(BlockVector{1, 0, 2, 0, 0, 1}, 3));
}
