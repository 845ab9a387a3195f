#include "wpb/errors.hpp"
#include "wpb/poset.hpp"
#include "wpb/random.hpp"

#include <doctest.h>

using namespace wpb;

namespace {

// Bitmask with the given 0-based elements set.
ElementSet set_of(std::initializer_list<std::size_t> xs)
{
    ElementSet s = 0;
    for (auto x : xs)
        s |= singleton(x);
    return s;
}

bool is_down_closed(const Poset& p, ElementSet set)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (contains(set, j) && p.leq(i, j) && !contains(set, i))
                return false;
    return true;
}

} // namespace

TEST_CASE("cover relations")
{
    const auto c = Poset::from_cover_relations(3, {{0, 1}, {1, 2}});
    CHECK(c == Poset::chain(3));
    CHECK(c.leq(0, 2));
    CHECK(Poset::from_cover_relations(3, {}) == Poset::antichain(3));
    CHECK_THROWS_AS(Poset::from_cover_relations(2, {{0, 1}, {1, 0}}), CycleDetected);
    CHECK(Poset::chain(4).cover_relations() == std::vector<Poset::Cover>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("chains and antichains")
{
    CHECK(Poset::chain(4).is_chain());
    CHECK_FALSE(Poset::chain(2).is_antichain());
    CHECK(Poset::antichain(1).is_chain());
    CHECK(Poset::antichain(1).is_antichain());
}

TEST_CASE("ideals and maximal elements")
{
    CHECK(Poset::chain(3).ideal(set_of({2})) == set_of({0, 1, 2}));
    CHECK(Poset::antichain(3).ideal(set_of({1})) == set_of({1}));
    const auto v = Poset::from_cover_relations(4, {{0, 2}, {1, 2}});
    CHECK(v.ideal(set_of({2, 3})) == set_of({0, 1, 2, 3}));

    CHECK(Poset::chain(3).maximal_elements(set_of({0, 1, 2})) == set_of({2}));
    CHECK(Poset::antichain(3).maximal_elements(set_of({0, 2})) == set_of({0, 2}));
    CHECK(v.maximal_elements(set_of({0, 1, 2})) == set_of({2}));
    CHECK_THROWS_AS(Poset::chain(3).maximal_elements(set_of({1})), NotAnIdeal);
}

TEST_CASE("disjoint union and linear sum")
{
    const auto du = disjoint_union(Poset::chain(2), Poset::chain(2));
    CHECK(du.cover_relations() == std::vector<Poset::Cover>{{0, 1}, {2, 3}});
    CHECK(disjoint_union(Poset::antichain(1), Poset::antichain(1)) == Poset::antichain(2));
    CHECK_FALSE(disjoint_union(Poset::chain(1), Poset::chain(1)).is_chain());

    CHECK(linear_sum(Poset::chain(2), Poset::chain(2)) == Poset::chain(4));
    const auto ls = linear_sum(Poset::antichain(2), Poset::antichain(2));
    CHECK(ls.leq(0, 2));
    CHECK(ls.leq(1, 3));
    CHECK_FALSE(ls.leq(0, 1));
    CHECK_FALSE(ls.leq(1, 0));
    CHECK(linear_sum(Poset::chain(1), Poset::chain(1)).is_chain());
}

TEST_CASE("products")
{
    // (i, j) -> i * t + j
    const auto diamond = cartesian_product(Poset::chain(2), Poset::chain(2));
    CHECK(diamond.cover_relations() == std::vector<Poset::Cover>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK_FALSE(diamond.leq(1, 2));
    CHECK_FALSE(diamond.leq(2, 1));
    CHECK(cartesian_product(Poset::antichain(2), Poset::antichain(2)) == Poset::antichain(4));
    CHECK(cartesian_product(Poset::chain(2), Poset::antichain(2)).cover_relations() ==
          std::vector<Poset::Cover>{{0, 2}, {1, 3}});

    CHECK(lex_product(Poset::chain(2), Poset::chain(2)) == Poset::chain(4));
    const auto la = lex_product(Poset::chain(2), Poset::antichain(2));
    CHECK(la.cover_relations() == std::vector<Poset::Cover>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(lex_product(Poset::antichain(2), Poset::antichain(2)) == Poset::antichain(4));
}

TEST_CASE("puncture and extend")
{
    CHECK(puncture(Poset::chain(3), 1) == Poset::chain(2));
    CHECK(puncture(Poset::antichain(3), 0) == Poset::antichain(2));
    const auto diamond = cartesian_product(Poset::chain(2), Poset::chain(2));
    CHECK(puncture(diamond, 3).cover_relations() == std::vector<Poset::Cover>{{0, 1}, {0, 2}});

    const auto e = extend(Poset::chain(2));
    CHECK(e.size() == 3);
    CHECK(e.leq(0, 1));
    CHECK_FALSE(e.leq(0, 2));
    CHECK_FALSE(e.leq(2, 1));
    CHECK(extend(Poset::antichain(2)) == Poset::antichain(3));
    for (std::size_t s = 1; s <= 5; ++s)
        CHECK_FALSE(extend(Poset::chain(s)).is_chain());
}

TEST_CASE("random posets: axioms, ideals and combinators")
{
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t s = rng.between(1, 8), t = rng.between(1, 4);
        const auto p = random_poset(rng, s);
        const auto q = random_poset(rng, t);
        CAPTURE(trial);
        REQUIRE(p.satisfies_axioms());
        for (const auto& r : {disjoint_union(p, q), linear_sum(p, q), cartesian_product(p, q),
                              lex_product(p, q), extend(p)})
            REQUIRE(r.satisfies_axioms());
        if (s >= 2)
            REQUIRE(puncture(p, rng.below(s)).satisfies_axioms());

        CHECK(linear_sum(p, q).is_chain() == (p.is_chain() && q.is_chain()));
        CHECK_FALSE(disjoint_union(p, q).is_chain());

        // Smallest down-set containing E: closed, contains E, and no
        // element outside E can be dropped.
        const ElementSet e = rng.below(ElementSet{1} << s);
        const ElementSet id = p.ideal(e);
        CHECK((id & e) == e);
        CHECK(is_down_closed(p, id));
        CHECK(p.is_ideal(id));
        for (std::size_t x = 0; x < s; ++x)
            if (contains(id, x) && !contains(e, x))
                CHECK_FALSE(is_down_closed(p, id & ~singleton(x)));

        // Maximal elements by definition.
        ElementSet naive = 0;
        for (std::size_t x = 0; x < s; ++x) {
            if (!contains(id, x))
                continue;
            bool top = true;
            for (std::size_t y = 0; y < s; ++y)
                if (contains(id, y) && p.less(x, y))
                    top = false;
            if (top)
                naive |= singleton(x);
        }
        CHECK(p.maximal_elements(id) == naive);
    }
    for (std::size_t s = 1; s <= 4; ++s)
        CHECK(cartesian_product(Poset::antichain(s), Poset::antichain(5 - s)) ==
              lex_product(Poset::antichain(s), Poset::antichain(5 - s)));
}

TEST_CASE("cover relations round trip")
{
    Rng rng(3);
    for (int k = 0; k < 40; ++k) {
        const auto p = random_poset(rng, rng.between(1, 10));
        CHECK(Poset::from_cover_relations(p.size(), p.cover_relations()) == p);
    }
}
