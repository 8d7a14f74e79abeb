#include <doctest.h>

#include "hasse/json_io.hpp"
#include "hasse/quaternion.hpp"

using namespace hasse;
using namespace hasse::json_io;

TEST_CASE("place strings") {
    CHECK(Place::finite(2).str() == "2:0");
    CHECK(Place::finite(5, 3).str() == "5:3");
    CHECK(Place::real().str() == "inf:real:0");
    CHECK(Place::complex(1).str() == "inf:complex:1");
    for (const char* s : {"2:0", "5:3", "inf:real:0", "inf:complex:1"}) CHECK(Place::parse(s).str() == s);
    CHECK_THROWS_AS(Place::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("field round-trip") {
    for (const AbelianField& K : {AbelianField::rationals(), AbelianField::cyclotomic(4),
                                  AbelianField::quadratic(-5), AbelianField::make(16, {15}),
                                  AbelianField::make(13, {5})}) {
        json j = field_to_json(K);
        CHECK(field_from_json(j) == K);
    }
    json q = field_to_json(AbelianField::rationals());
    CHECK(q["conductor"] == 1);
    CHECK(q["generators"].empty());
}

TEST_CASE("class round-trip and the documented shape") {
    CsaClass h = quaternion_class(-1, -1);
    json j = class_to_json(h);
    CHECK(j["inv"]["2:0"] == "1/2");
    CHECK(j["inv"]["inf:real:0"] == "1/2");
    CHECK(class_from_json(j) == h);

    // Invalid payloads are rejected by the validator.
    json bad = j;
    bad["inv"].erase("inf:real:0");
    CHECK_THROWS_WITH_AS(class_from_json(bad), doctest::Contains("reciprocity"), std::invalid_argument);
}

TEST_CASE("group round-trip") {
    FiniteGroup q8 = FiniteGroup::quaternion8();
    json j = group_to_json(q8);
    CHECK(group_from_json(j) == q8);
    json bad = j;
    bad["order"] = 7;
    CHECK_THROWS_AS(group_from_json(bad), std::invalid_argument);
}

TEST_CASE("character table JSON") {
    CharacterTable t = character_table(FiniteGroup::quaternion8());
    json j = character_table_to_json(t);
    CHECK(j["order"] == 8);
    CHECK(j["exponent"] == 4);
    CHECK(j["characters"].size() == 5);
    CHECK(j["characters"][4]["degree"] == 2);
    CHECK(j["characters"][4]["values"][0] == "2");
    CHECK(j["characters"][4]["values"][1] == "-2");
}

TEST_CASE("scenario round-trip, with prime expansion in extra_support") {
    json j{{"n", 2},
           {"p", 3},
           {"K", {{"conductor", 1}, {"generators", json::array()}}},
           {"duality_type", "symplectic"},
           {"extra_support", json::array({5, "7:0"})}};
    ConstraintScenario s = scenario_from_json(j);
    CHECK(s.dimension == 2);
    CHECK(s.residue_char == 3);
    CHECK(s.duality == DualityType::symplectic);
    CHECK(s.torsion_cap == 2);  // defaulted
    REQUIRE(s.extra_support.size() == 2);
    CHECK(s.extra_support[0] == Place::finite(5));
    CHECK(s.extra_support[1] == Place::finite(7));
    CHECK(scenario_from_json(scenario_to_json(s)).dimension == 2);
    CHECK(scenario_from_json(scenario_to_json(s)).extra_support == s.extra_support);
}

TEST_CASE("solution set JSON carries forced values and solutions") {
    ConstraintScenario s =
        ConstraintScenario::make(2, 3, AbelianField::rationals(), DualityType::symplectic);
    SolutionSet sol = enumerate_solutions(s);
    json j = solution_set_to_json(sol);
    CHECK(j["status"] == "consistent");
    CHECK(j["p_fiber_sum"] == "1/2");
    CHECK(j["forced"]["3:0"] == "1/2");
    CHECK(j["solutions"].size() == 2);
    CHECK(j["candidates"] == 16);
    CHECK(j["constraints"].size() == 9);
}

TEST_CASE("pair files accept raw maps with or without a field") {
    ConstraintScenario s =
        ConstraintScenario::make(2, 3, AbelianField::rationals(), DualityType::symplectic);
    json j{{"jl", {{"inv", {{"3:0", "1/2"}, {"inf:real:0", "1/2"}}}}},
           {"lp", {{"inv", json::object()}}}};
    auto [jl, lp] = raw_pair_from_json(j, s.field);
    CHECK(jl.size() == 2);
    CHECK(lp.empty());
    CHECK(check_pair(s, jl, lp).accepted);

    json mismatched = j;
    mismatched["jl"]["field"] = {{"conductor", 4}, {"generators", json::array()}};
    CHECK_THROWS_AS(raw_pair_from_json(mismatched, s.field), std::invalid_argument);
}
