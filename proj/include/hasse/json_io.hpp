#pragma once

// JSON serialization of the public types. Invariants are rendered as
// fraction strings ("1/2", "0"), places as their label strings
// ("2:0", "inf:real:0"), fields as conductor plus generators.

#include "hasse/abelian_field.hpp"
#include "hasse/brauer.hpp"
#include "hasse/character_table.hpp"
#include "hasse/constraints.hpp"
#include "hasse/finite_group.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hasse::json_io {

using nlohmann::json;

inline json field_to_json(const AbelianField& K) {
    json j;
    j["conductor"] = K.conductor();
    j["generators"] = json::array();
    for (i64 g : K.generators_hint()) j["generators"].push_back(g);
    j["degree"] = K.degree();
    return j;
}

inline AbelianField field_from_json(const json& j) {
    if (!j.contains("conductor")) throw std::invalid_argument("field JSON: missing 'conductor'");
    std::vector<i64> gens;
    if (j.contains("generators")) {
        for (const auto& g : j.at("generators")) gens.push_back(g.get<i64>());
    }
    return AbelianField::make(j.at("conductor").get<i64>(), std::span<const i64>(gens.data(), gens.size()));
}

inline json invariants_to_json(const std::map<Place, CyclicRational>& inv) {
    json j = json::object();
    for (const auto& [place, value] : inv) j[place.str()] = value.str();
    return j;
}

inline InvariantVector invariants_from_json(const json& j) {
    InvariantVector out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        CyclicRational value = CyclicRational::parse(it.value().get<std::string>());
        if (!value.is_zero()) out.emplace(Place::parse(it.key()), value);
    }
    return out;
}

inline json class_to_json(const CsaClass& c) {
    json j;
    j["field"] = field_to_json(c.field());
    j["inv"] = invariants_to_json(c.invariants());
    return j;
}

inline CsaClass class_from_json(const json& j) {
    return CsaClass::make(field_from_json(j.at("field")), invariants_from_json(j.at("inv")));
}

inline json group_to_json(const FiniteGroup& g) {
    json j;
    j["order"] = g.order();
    j["table"] = g.table();
    return j;
}

inline FiniteGroup group_from_json(const json& j) {
    auto table = j.at("table").get<std::vector<std::vector<int>>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size())
        throw std::invalid_argument("group JSON: order does not match table size");
    return FiniteGroup::from_table(std::move(table));
}

inline json character_table_to_json(const CharacterTable& t) {
    json j;
    j["order"] = t.group.order();
    j["exponent"] = t.exponent;
    j["classes"] = json::array();
    for (const auto& c : t.classes) {
        j["classes"].push_back({{"representative", c.representative},
                                {"size", c.size},
                                {"element_order", c.element_order}});
    }
    j["characters"] = json::array();
    for (const auto& row : t.characters) {
        json values = json::array();
        for (const auto& v : row.values) values.push_back(v.str());
        j["characters"].push_back({{"degree", row.degree}, {"values", values}});
    }
    j["value_notation"] = "polynomials in z, a fixed primitive root of unity of order = exponent";
    return j;
}

inline json scenario_to_json(const ConstraintScenario& s) {
    json j;
    j["n"] = s.dimension;
    j["p"] = s.residue_char;
    j["K"] = field_to_json(s.field);
    j["duality_type"] = duality_name(s.duality);
    j["conjecture_mode"] = s.conjecture_mode;
    j["extra_support"] = json::array();
    for (const Place& v : s.extra_support) j["extra_support"].push_back(v.str());
    j["torsion_cap"] = s.torsion_cap;
    return j;
}

/// Accepts extra_support entries either as full place labels ("5:1") or as
/// bare primes (5 or "5"), which expand to every place over that prime.
inline ConstraintScenario scenario_from_json(const json& j) {
    AbelianField K = field_from_json(j.at("K"));
    std::vector<Place> extra;
    if (j.contains("extra_support")) {
        for (const auto& entry : j.at("extra_support")) {
            if (entry.is_number_integer()) {
                for (const Place& v : K.places_over(entry.get<i64>())) extra.push_back(v);
                continue;
            }
            std::string text = entry.get<std::string>();
            if (text.find(':') == std::string::npos) {
                for (const Place& v : K.places_over(std::stoll(text))) extra.push_back(v);
            } else {
                extra.push_back(Place::parse(text));
            }
        }
    }
    std::optional<i64> cap;
    if (j.contains("torsion_cap")) cap = j.at("torsion_cap").get<i64>();
    return ConstraintScenario::make(j.at("n").get<i64>(), j.at("p").get<i64>(), std::move(K),
                                    duality_from_name(j.at("duality_type").get<std::string>()),
                                    j.value("conjecture_mode", false), std::move(extra), cap);
}

/// A pair file carries raw invariant maps; the field is implied by the
/// scenario (an explicit "field" member, when present, must match).
inline std::pair<InvariantVector, InvariantVector> raw_pair_from_json(const json& j, const AbelianField& K) {
    auto one = [&](const json& side) {
        if (side.contains("field") && !(field_from_json(side.at("field")) == K))
            throw std::invalid_argument("pair JSON: field does not match the scenario field");
        return invariants_from_json(side.contains("inv") ? side.at("inv") : side);
    };
    return {one(j.at("jl")), one(j.at("lp"))};
}

inline json check_report_to_json(const CheckReport& r) {
    json j;
    j["accepted"] = r.accepted;
    j["checks"] = json::array();
    for (const auto& c : r.checks) {
        j["checks"].push_back({{"name", c.name},
                               {"applicable", c.applicable},
                               {"passed", c.passed},
                               {"detail", c.detail}});
    }
    return j;
}

inline const std::vector<std::string>& constraint_provenance() {
    static const std::vector<std::string> notes{
        "scenario: n, p, K, duality type; finite-order central character assumed",
        "degenerate_dimension: n = 1 has commutative enveloping algebras, both classes trivial",
        "archimedean_sum: inv_v(jl) + inv_v(lp) = 1/2 for self-dual type, 0 otherwise, at v | infinity",
        "away_sum: inv_v(jl) + inv_v(lp) = 0 at finite v away from p",
        "p_fiber_sum: sum over v|p of inv_v(jl) + inv_v(lp) = (1/2)[K:Q] in Q/Z",
        "benard_schacher: over p each vector has entries of one order m, m divides w(K), twisting by the cyclotomic character",
        "torsion_bound: entries over p are gcd(n, p-1)-torsion",
        "reciprocity: each vector is a Brauer class (half-integral at real places, zero at complex places, sum zero)",
        "conjecture: equality of invariants at p (not-self-dual/orthogonal, or even degree); half-shift allowed at p for symplectic odd degree",
    };
    return notes;
}

inline json solution_set_to_json(const SolutionSet& s) {
    json j;
    j["scenario"] = scenario_to_json(s.scenario);
    j["status"] = s.status == SolutionSet::Status::consistent ? "consistent" : "inconsistent";
    if (s.status == SolutionSet::Status::inconsistent) j["violated_constraint"] = s.violated_constraint;
    j["forced"] = invariants_to_json(s.forced);
    j["p_fiber_sum"] = s.p_fiber_sum.str();
    j["candidates"] = s.candidates;
    j["solutions"] = json::array();
    for (const auto& pair : s.solutions) {
        j["solutions"].push_back({{"jl", invariants_to_json(pair.jl.invariants())},
                                  {"lp", invariants_to_json(pair.lp.invariants())}});
    }
    j["constraints"] = constraint_provenance();
    return j;
}

}  // namespace hasse::json_io
