#include <doctest.h>

#include "hasse/quaternion.hpp"

using namespace hasse;

TEST_CASE("golden values at 2 and infinity") {
    CHECK(hilbert_symbol(-1, -1, Place::finite(2)) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::real()) == -1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(3)) == 1);
    CHECK(hilbert_symbol(-1, -1, Place::finite(5)) == 1);
}

TEST_CASE("squares are universally split") {
    for (i64 b : {-7, -1, 2, 3, 10}) {
        CHECK(hilbert_symbol(1, b, Place::real()) == 1);
        for (i64 p : {2, 3, 5, 7}) CHECK(hilbert_symbol(1, b, Place::finite(p)) == 1);
        CHECK(hilbert_symbol(4, b, Place::finite(2)) == 1);
        CHECK(hilbert_symbol(9, b, Place::finite(3)) == 1);
    }
}

TEST_CASE("oracle-derived spot values") {
    CHECK(hilbert_symbol(2, 5, Place::finite(5)) == -1);
    CHECK(local_solubility_oracle(2, 5, Place::finite(5)) == -1);
    CHECK(local_solubility_oracle(-1, -1, Place::finite(2), 6) == -1);
    CHECK(local_solubility_oracle(1, 1, Place::finite(2), 6) == 1);
    CHECK(local_solubility_oracle(3, 7, Place::finite(3), 6) == hilbert_symbol(3, 7, Place::finite(3)));
    CHECK(local_solubility_oracle(-1, -1, Place::real()) == -1);
    CHECK(local_solubility_oracle(-1, 2, Place::real()) == 1);
}

TEST_CASE("oracle agrees with the closed form at high valuations") {
    struct Case {
        i64 a, b, p;
    };
    for (const Case& c : {Case{27, 27, 3}, Case{16, 16, 2}, Case{-27, 18, 3}, Case{25, 50, 5},
                          Case{-16, -16, 2}, Case{49, -21, 7}}) {
        CAPTURE(c.a);
        CAPTURE(c.b);
        CAPTURE(c.p);
        CHECK(local_solubility_oracle(c.a, c.b, Place::finite(c.p)) ==
              hilbert_symbol(c.a, c.b, Place::finite(c.p)));
    }
}

TEST_CASE("zero arguments are rejected") {
    CHECK_THROWS_AS(hilbert_symbol(0, 1, Place::finite(2)), std::invalid_argument);
    CHECK_THROWS_AS(local_solubility_oracle(1, 0, Place::finite(2)), std::invalid_argument);
    CHECK_THROWS_AS(quaternion_class(0, 5), std::invalid_argument);
}

TEST_CASE("symmetry and (a, -a) = 1") {
    std::vector<Place> places{Place::real()};
    for (i64 p : {2, 3, 5, 7, 11, 13}) places.push_back(Place::finite(p));
    for (i64 a = -12; a <= 12; ++a) {
        if (a == 0) continue;
        for (i64 b = -12; b <= 12; ++b) {
            if (b == 0) continue;
            for (const Place& v : places) {
                CHECK(hilbert_symbol(a, b, v) == hilbert_symbol(b, a, v));
            }
        }
        for (const Place& v : places) CHECK(hilbert_symbol(a, -a, v) == 1);
    }
}

TEST_CASE("bilinearity on square-free triples") {
    std::vector<Place> places{Place::real()};
    for (i64 p : {2, 3, 5, 7}) places.push_back(Place::finite(p));
    std::vector<i64> pool{-10, -7, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10};
    for (i64 a : pool) {
        for (i64 b1 : pool) {
            for (i64 b2 : pool) {
                for (const Place& v : places) {
                    CHECK(hilbert_symbol(a, b1 * b2, v) == hilbert_symbol(a, b1, v) * hilbert_symbol(a, b2, v));
                }
            }
        }
    }
}

TEST_CASE("quaternion classes") {
    CsaClass h = quaternion_class(-1, -1);
    CHECK(h.invariant_at(Place::finite(2)) == CyclicRational::half());
    CHECK(h.invariant_at(Place::real()) == CyclicRational::half());
    CHECK(h.invariants().size() == 2);
    CHECK(h.index() == 2);

    CHECK(quaternion_class(1, 7).is_trivial());

    CsaClass c25 = quaternion_class(2, 5);
    CHECK(c25.invariant_at(Place::finite(2)) == CyclicRational::half());
    CHECK(c25.invariant_at(Place::finite(5)) == CyclicRational::half());
    CHECK(c25.invariants().size() == 2);
}

TEST_CASE("Hilbert reciprocity on the grid |a|,|b| <= 30") {
    for (i64 a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        for (i64 b = -30; b <= 30; ++b) {
            if (b == 0) continue;
            // quaternion_class validates the sum-to-zero contract internally.
            CsaClass c = quaternion_class(a, b);
            CHECK(c.invariants().size() % 2 == 0);  // an even number of -1 places
        }
    }
}
