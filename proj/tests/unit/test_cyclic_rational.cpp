#include <doctest.h>

#include "hasse/cyclic_rational.hpp"

#include <random>

using hasse::CyclicRational;
using hasse::Integer;

TEST_CASE("addition in Q/Z") {
    CHECK(CyclicRational(1, 2) + CyclicRational(1, 2) == CyclicRational());
    CHECK(CyclicRational(1, 3) + CyclicRational(1, 2) == CyclicRational(5, 6));
    CHECK(CyclicRational(5, 6) + CyclicRational(5, 6) == CyclicRational(2, 3));
}

TEST_CASE("negation") {
    CHECK(-CyclicRational() == CyclicRational());
    CHECK(-CyclicRational(1, 2) == CyclicRational(1, 2));
    CHECK(-CyclicRational(1, 3) == CyclicRational(2, 3));
}

TEST_CASE("order equals the reduced denominator") {
    CHECK(CyclicRational().order() == 1);
    CHECK(CyclicRational(1, 2).order() == 2);
    CHECK(CyclicRational(5, 6).order() == 6);
}

TEST_CASE("scalar multiplication") {
    CHECK(Integer(3) * CyclicRational(1, 2) == CyclicRational(1, 2));
    CHECK(Integer(2) * CyclicRational(1, 2) == CyclicRational());
    CHECK(Integer(5) * CyclicRational(1, 6) == CyclicRational(5, 6));
}

TEST_CASE("canonical form") {
    CHECK(CyclicRational(7, 2) == CyclicRational(1, 2));
    CHECK(CyclicRational(-1, 3) == CyclicRational(2, 3));
    CHECK(CyclicRational(4, 6) == CyclicRational(2, 3));
    CHECK(CyclicRational(6, 3).is_zero());
    CHECK(CyclicRational(0, 17).denominator() == 1);
    CHECK_THROWS_AS(CyclicRational(1, 0), std::invalid_argument);
}

TEST_CASE("parse and print round-trip") {
    CHECK(CyclicRational::parse("1/2") == CyclicRational(1, 2));
    CHECK(CyclicRational::parse("0") == CyclicRational());
    CHECK(CyclicRational::parse("-1/3") == CyclicRational(2, 3));
    CHECK(CyclicRational::parse("3") == CyclicRational());
    CHECK(CyclicRational(2, 3).str() == "2/3");
    CHECK(CyclicRational().str() == "0");
    CHECK_THROWS_AS(CyclicRational::parse("x/y"), std::invalid_argument);
}

TEST_CASE("group laws on random triples") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 24);
    for (int trial = 0; trial < 500; ++trial) {
        CyclicRational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + (-a) == CyclicRational());
        CHECK(-(-a) == a);
        // order(a) divides d whenever d*a = 0
        for (long long d = 1; d <= 12; ++d) {
            if ((Integer(d) * a).is_zero()) CHECK(Integer(d) % a.order() == 0);
        }
    }
}
