#include "wpb/errors.hpp"
#include "wpb/random.hpp"
#include "wpb/weights.hpp"

#include <doctest.h>

using namespace wpb;

TEST_CASE("hamming tables")
{
    const auto w2 = hamming_weight(make_field(2));
    CHECK(w2.table() == std::vector<unsigned>{0, 1});
    CHECK(w2.max_weight() == 1);
    CHECK(hamming_weight(make_field(5)).table() == std::vector<unsigned>{0, 1, 1, 1, 1});
    const auto w4 = hamming_weight(make_field(4));
    CHECK(w4.max_weight() == 1);
    CHECK(w4.min_weight() == 1);
}

TEST_CASE("lee tables")
{
    const auto w5 = lee_weight(make_field(5));
    CHECK(w5.table() == std::vector<unsigned>{0, 1, 2, 2, 1});
    CHECK(w5.max_weight() == 2);
    CHECK(w5.min_weight() == 1);
    CHECK(w5.max_element() == 2);
    CHECK(lee_weight(make_field(2)).table() == std::vector<unsigned>{0, 1});
    CHECK(lee_weight(make_field(2)) == hamming_weight(make_field(2)));
    CHECK(lee_weight(make_field(7)).max_weight() == 3);
    CHECK_THROWS_AS(lee_weight(make_field(4)), LeeRequiresPrimeField);
}

TEST_CASE("custom table validation")
{
    const auto f3 = make_field(3);
    CHECK(custom_weight(f3, {0, 1, 1}) == hamming_weight(f3));

    try {
        custom_weight(f3, {0, 2, 1});
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom() == WeightAxiom::symmetry);
        CHECK(e.alpha() == 1);
    }

    try {
        custom_weight(make_field(5), {0, 1, 3, 3, 1});
        FAIL("expected AxiomViolation");
    } catch (const AxiomViolation& e) {
        CHECK(e.axiom() == WeightAxiom::triangle);
        CHECK(e.alpha() == 1);
        CHECK(e.beta() == 1);
    }

    auto axiom_of = [&](std::vector<unsigned> t) {
        try {
            custom_weight(f3, std::move(t));
        } catch (const AxiomViolation& e) {
            return e.axiom();
        }
        FAIL("expected AxiomViolation");
        return WeightAxiom::length;
    };
    CHECK(axiom_of({0, 1}) == WeightAxiom::length);
    CHECK(axiom_of({1, 1, 1}) == WeightAxiom::zero);
    CHECK(axiom_of({0, 0, 0}) == WeightAxiom::positivity);
}

TEST_CASE("random weights satisfy the axioms")
{
    Rng rng(7);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
        const auto f = make_field(q);
        for (int k = 0; k < 20; ++k) {
            const auto w = random_weight(rng, f, 5);
            const auto& t = w.table();
            REQUIRE(t[0] == 0);
            for (unsigned a = 1; a < q; ++a) {
                REQUIRE(t[a] >= 1);
                REQUIRE(t[a] <= 5);
                REQUIRE(t[a] == t[f->neg(static_cast<Element>(a))]);
                for (unsigned b = 0; b < q; ++b)
                    REQUIRE(t[f->add(static_cast<Element>(a), static_cast<Element>(b))] <= t[a] + t[b]);
            }
        }
    }
}
