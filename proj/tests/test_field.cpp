#include "wpb/errors.hpp"
#include "wpb/field.hpp"

#include <doctest.h>

using namespace wpb;

TEST_CASE("small prime fields")
{
    const auto f2 = make_field(2);
    CHECK(f2->add(1, 1) == 0);
    const auto f5 = make_field(5);
    CHECK(f5->add(3, 4) == 2);
    CHECK(f5->inv(2) == 3);
    CHECK(f5->neg(1) == 4);
    CHECK_THROWS_AS(f5->inv(0), DivisionByZero);
}

TEST_CASE("GF(4) under x^2 + x + 1")
{
    const auto f = make_field(4);
    CHECK(f->p() == 2);
    CHECK(f->e() == 2);
    CHECK(f->modulus() == std::vector<unsigned>{1, 1, 1});
    CHECK(f->mul(2, 2) == 3);
    CHECK(f->add(2, 3) == 1);
    CHECK_FALSE(f->is_prime());
}

TEST_CASE("non prime powers are rejected")
{
    for (unsigned q : {0u, 1u, 6u, 10u, 12u, 100u, 257u})
        CHECK_THROWS_AS(make_field(q), NotAPrimePower);
    CHECK(prime_power(6) == std::pair{0u, 0u});
    CHECK(prime_power(27) == std::pair{3u, 3u});
}

// Independent axiom scan over every triple, for fields up to 27.
TEST_CASE("field axioms by brute force")
{
    for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 16u, 25u, 27u}) {
        CAPTURE(q);
        const auto f = make_field(q);
        for (unsigned a = 0; a < q; ++a) {
            const auto x = static_cast<Element>(a);
            REQUIRE(f->add(x, 0) == x);
            REQUIRE(f->mul(x, 1) == x);
            REQUIRE(f->add(x, f->neg(x)) == 0);
            if (a)
                REQUIRE(f->mul(x, f->inv(x)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                const auto y = static_cast<Element>(b);
                REQUIRE(f->add(x, y) == f->add(y, x));
                REQUIRE(f->mul(x, y) == f->mul(y, x));
                REQUIRE(f->sub(x, y) == f->add(x, f->neg(y)));
                for (unsigned c = 0; c < q; ++c) {
                    const auto z = static_cast<Element>(c);
                    REQUIRE(f->mul(x, f->add(y, z)) == f->add(f->mul(x, y), f->mul(x, z)));
                    REQUIRE(f->mul(f->mul(x, y), z) == f->mul(x, f->mul(y, z)));
                    REQUIRE(f->add(f->add(x, y), z) == f->add(x, f->add(y, z)));
                }
            }
        }
    }
}

TEST_CASE("extension addition is digit-wise mod p")
{
    const auto f = make_field(9);
    for (unsigned a = 0; a < 9; ++a)
        for (unsigned b = 0; b < 9; ++b) {
            const unsigned lo = (a % 3 + b % 3) % 3, hi = (a / 3 + b / 3) % 3;
            CHECK(f->add(static_cast<Element>(a), static_cast<Element>(b)) == hi * 3 + lo);
        }
}

TEST_CASE("primitive element generates the multiplicative group")
{
    for (unsigned q : {4u, 8u, 9u, 13u, 32u, 256u}) {
        const auto f = make_field(q);
        std::vector<bool> seen(q, false);
        Element x = 1;
        for (unsigned i = 0; i + 1 < q; ++i) {
            CHECK_FALSE(seen[x]);
            seen[x] = true;
            x = f->mul(x, f->primitive());
        }
        CHECK(x == 1);
    }
}

TEST_CASE("largest field")
{
    const auto f = make_field(256);
    CHECK(f->e() == 8);
    CHECK(f->mul(f->inv(0x53), 0x53) == 1);
    CHECK_NOTHROW(f->check_axioms());
}
