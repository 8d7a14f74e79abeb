#pragma once

// The finite constraint system relating the two invariant vectors attached
// to a supercuspidal datum: the away-from-p pairing, the archimedean sums,
// the p-fiber sum identity, the Benard-Schacher uniformity and twist
// relations, the gcd(n, p-1) torsion bound, global reciprocity of each
// vector, and (optionally) the self-duality conjecture cases. Scenarios are
// enumerated over the finite grid of invariants supported on the places
// over p, the archimedean places, and a declared extra support.

#include "hasse/abelian_field.hpp"
#include "hasse/brauer.hpp"
#include "hasse/cyclic_rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

enum class DualityType { not_self_dual, orthogonal, symplectic };

inline std::string duality_name(DualityType d) {
    switch (d) {
        case DualityType::not_self_dual: return "not_self_dual";
        case DualityType::orthogonal: return "orthogonal";
        case DualityType::symplectic: return "symplectic";
    }
    throw std::logic_error("duality_name: bad value");
}

inline DualityType duality_from_name(const std::string& s) {
    if (s == "not_self_dual") return DualityType::not_self_dual;
    if (s == "orthogonal") return DualityType::orthogonal;
    if (s == "symplectic") return DualityType::symplectic;
    throw std::invalid_argument("unknown duality type '" + s + "'");
}

using InvariantVector = std::map<Place, CyclicRational>;

struct ConstraintScenario {
    i64 dimension = 2;       // n
    i64 residue_char = 2;    // p
    AbelianField field = AbelianField::rationals();  // model of the rationality field
    DualityType duality = DualityType::not_self_dual;
    bool conjecture_mode = false;
    std::vector<Place> extra_support;  // finite places away from p allowed nonzero
    i64 torsion_cap = 2;               // denominator bound on extra-support values

    bool self_dual() const { return duality != DualityType::not_self_dual; }

    /// Validates the scenario invariants: p prime, n >= 1, self-dual types
    /// require a totally real field, extra support is finite, away from p,
    /// and belongs to the field. The finite-order hypothesis on the central
    /// character is assumed, not checked.
    static ConstraintScenario make(i64 n, i64 p, AbelianField field, DualityType duality,
                                   bool conjecture_mode = false, std::vector<Place> extra_support = {},
                                   std::optional<i64> torsion_cap = std::nullopt) {
        if (n < 1) throw std::invalid_argument("scenario: dimension must be positive");
        if (!is_prime(p)) throw std::invalid_argument("scenario: residue characteristic must be prime");
        if (duality != DualityType::not_self_dual && !field.is_totally_real())
            throw std::invalid_argument("scenario: self-dual duality type requires a totally real field");
        i64 cap = torsion_cap.value_or(std::lcm(n, p - 1));
        if (cap < 1) throw std::invalid_argument("scenario: torsion cap must be positive");
        std::sort(extra_support.begin(), extra_support.end());
        extra_support.erase(std::unique(extra_support.begin(), extra_support.end()), extra_support.end());
        for (const Place& v : extra_support) {
            if (!v.is_finite()) throw std::invalid_argument("scenario: extra support places must be finite");
            if (v.p == p) throw std::invalid_argument("scenario: extra support must avoid the residue characteristic");
            if (!field.is_valid_place(v))
                throw std::invalid_argument("scenario: extra support place " + v.str() + " does not belong to the field");
        }
        return ConstraintScenario{n, p, std::move(field), duality, conjecture_mode, std::move(extra_support), cap};
    }
};

struct InvariantPair {
    CsaClass jl;  // class attached to the division-algebra side
    CsaClass lp;  // class attached to the twisted-parameter side

    bool operator==(const InvariantPair& o) const { return jl == o.jl && lp == o.lp; }
};

struct ConstraintCheck {
    std::string name;
    bool applicable = true;
    bool passed = true;
    std::string detail;
};

struct CheckReport {
    bool accepted = true;
    std::vector<ConstraintCheck> checks;

    const ConstraintCheck* first_failure() const {
        for (const auto& c : checks) {
            if (c.applicable && !c.passed) return &c;
        }
        return nullptr;
    }
};

/// Required value of inv_v(jl) + inv_v(lp) at a finite place away from p:
/// always zero.
inline CyclicRational required_sum_away(const ConstraintScenario& scenario, const Place& v) {
    if (!v.is_finite()) throw std::invalid_argument("required_sum_away: place must be finite");
    if (v.p == scenario.residue_char) throw std::invalid_argument("required_sum_away: place lies over p");
    return CyclicRational();
}

/// Required value of inv_v(jl) + inv_v(lp) at an archimedean place: 1/2 for
/// the self-dual types, 0 otherwise. (At complex places both individual
/// invariants vanish, so only not_self_dual is consistent there.)
inline CyclicRational required_sum_archimedean(const ConstraintScenario& scenario, const Place& v) {
    if (v.is_finite()) throw std::invalid_argument("required_sum_archimedean: place must be archimedean");
    return scenario.self_dual() ? CyclicRational::half() : CyclicRational();
}

/// Required value of the sum over all v | p of inv_v(jl) + inv_v(lp):
/// (1/2) [K:Q] in Q/Z.
inline CyclicRational required_p_fiber_sum(const ConstraintScenario& scenario) {
    return Integer(scenario.field.degree()) * CyclicRational::half();
}

/// Benard-Schacher conditions on one invariant vector restricted to the
/// places over p: (i) all entries have the same order m, (ii) m divides the
/// order of the group of roots of unity of K, (iii) for every sigma with
/// sigma(zeta_m) = zeta_m^b the entry at P equals b times the entry at
/// sigma(P). Missing entries count as zero.
inline bool benard_schacher_filter(const ConstraintScenario& scenario, const InvariantVector& vec) {
    std::vector<Place> fiber = scenario.field.places_over(scenario.residue_char);
    auto at = [&](const Place& v) {
        auto it = vec.find(v);
        return it == vec.end() ? CyclicRational() : it->second;
    };
    Integer order = at(fiber.front()).order();
    for (const Place& v : fiber) {
        if (at(v).order() != order) return false;
    }
    if (order == 1) return true;
    i64 w = scenario.field.roots_of_unity_order();
    if (order > w || Integer(w) % order != 0) return false;
    i64 m = order.convert_to<i64>();
    for (const GaloisElement& sigma : scenario.field.galois_group()) {
        i64 b = scenario.field.zeta_action_exponent(sigma, m);
        for (const Place& v : fiber) {
            if (!(at(v) == Integer(b) * at(scenario.field.galois_act(sigma, v)))) return false;
        }
    }
    return true;
}

/// Torsion bound at the places over p: every entry must be killed by
/// gcd(n, p-1).
inline bool torsion_filter(const ConstraintScenario& scenario, const InvariantVector& vec) {
    Integer bound = std::gcd(scenario.dimension, scenario.residue_char - 1);
    for (const Place& v : scenario.field.places_over(scenario.residue_char)) {
        auto it = vec.find(v);
        if (it != vec.end() && bound % it->second.order() != 0) return false;
    }
    return true;
}

namespace detail {

inline CyclicRational value_at(const InvariantVector& vec, const Place& v) {
    auto it = vec.find(v);
    return it == vec.end() ? CyclicRational() : it->second;
}

}  // namespace detail

/// The conjectural refinement at p. Case (1): for not-self-dual or
/// orthogonal type the invariants agree at every v | p. Case (2) for
/// symplectic type: even [K:Q] forces agreement at every finite place; odd
/// [K:Q] forces agreement away from p and allows a shift by 1/2 at v | p.
inline bool conjecture_filter(const ConstraintScenario& scenario, const InvariantVector& jl,
                              const InvariantVector& lp) {
    if (!scenario.conjecture_mode) throw std::invalid_argument("conjecture_filter: conjecture mode is off");
    std::vector<Place> fiber = scenario.field.places_over(scenario.residue_char);
    auto equal_at = [&](const Place& v) { return detail::value_at(jl, v) == detail::value_at(lp, v); };

    if (scenario.duality != DualityType::symplectic) {
        for (const Place& v : fiber) {
            if (!equal_at(v)) return false;
        }
        return true;
    }
    std::vector<Place> finite_support;
    for (const auto& [v, inv] : jl) {
        if (v.is_finite()) finite_support.push_back(v);
    }
    for (const auto& [v, inv] : lp) {
        if (v.is_finite()) finite_support.push_back(v);
    }
    finite_support.insert(finite_support.end(), fiber.begin(), fiber.end());
    std::sort(finite_support.begin(), finite_support.end());
    finite_support.erase(std::unique(finite_support.begin(), finite_support.end()), finite_support.end());

    const bool even_degree = scenario.field.degree() % 2 == 0;
    for (const Place& v : finite_support) {
        if (v.p == scenario.residue_char) {
            if (even_degree) {
                if (!equal_at(v)) return false;
            } else {
                CyclicRational diff = detail::value_at(jl, v) - detail::value_at(lp, v);
                if (!diff.is_zero() && !(diff == CyclicRational::half())) return false;
            }
        } else {
            if (!equal_at(v)) return false;
        }
    }
    return true;
}

inline bool conjecture_filter(const ConstraintScenario& scenario, const InvariantPair& pair) {
    return conjecture_filter(scenario, pair.jl.invariants(), pair.lp.invariants());
}

namespace detail {

// Shared constraint evaluation; check_pair and the enumerator agree by
// construction. Order is fixed for deterministic diagnostics.
inline std::vector<ConstraintCheck> evaluate_constraints(const ConstraintScenario& scenario,
                                                         const InvariantVector& jl, const InvariantVector& lp) {
    std::vector<ConstraintCheck> checks;
    const bool degenerate = scenario.dimension == 1;
    const AbelianField& K = scenario.field;

    checks.push_back({"scenario", true, true,
                      "hypotheses validated at construction; finite-order central character assumed"});

    {
        ConstraintCheck c{"degenerate_dimension", degenerate, true,
                          "n = 1: commutative enveloping algebras force both classes to be trivial"};
        if (degenerate) {
            for (const auto& [v, inv] : jl) c.passed &= inv.is_zero();
            for (const auto& [v, inv] : lp) c.passed &= inv.is_zero();
            if (!c.passed) c.detail = "n = 1 requires both invariant vectors to vanish everywhere";
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"archimedean_sum", !degenerate, true, ""};
        if (!degenerate) {
            CyclicRational required = required_sum_archimedean(scenario, K.is_totally_real() ? Place::real(0) : Place::complex(0));
            for (const Place& v : K.archimedean_places()) {
                CyclicRational a = value_at(jl, v), b = value_at(lp, v);
                if (v.kind == Place::Kind::complex && !(a.is_zero() && b.is_zero())) {
                    c.passed = false;
                    c.detail = "complex place " + v.str() + " forces both invariants to vanish";
                    break;
                }
                if (!(a + b == required)) {
                    c.passed = false;
                    c.detail = "sum at " + v.str() + " is " + (a + b).str() + ", required " + required.str();
                    break;
                }
            }
            if (c.passed) c.detail = "archimedean pairing: sum = " + required.str() + " at every infinite place";
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"away_sum", !degenerate, true, "pairing away from p: invariants cancel at every v away from p and infinity"};
        if (!degenerate) {
            std::vector<Place> support;
            for (const auto& [v, inv] : jl) {
                if (v.is_finite() && v.p != scenario.residue_char) support.push_back(v);
            }
            for (const auto& [v, inv] : lp) {
                if (v.is_finite() && v.p != scenario.residue_char) support.push_back(v);
            }
            support.insert(support.end(), scenario.extra_support.begin(), scenario.extra_support.end());
            std::sort(support.begin(), support.end());
            support.erase(std::unique(support.begin(), support.end()), support.end());
            for (const Place& v : support) {
                CyclicRational sum = value_at(jl, v) + value_at(lp, v);
                if (!sum.is_zero()) {
                    c.passed = false;
                    c.detail = "sum at " + v.str() + " is " + sum.str() + ", required 0";
                    break;
                }
            }
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"p_fiber_sum", !degenerate, true, ""};
        if (!degenerate) {
            CyclicRational required = required_p_fiber_sum(scenario);
            CyclicRational total;
            for (const Place& v : K.places_over(scenario.residue_char)) {
                total += value_at(jl, v) + value_at(lp, v);
            }
            c.passed = total == required;
            c.detail = c.passed
                           ? "sum over v|p equals (1/2)[K:Q] = " + required.str()
                           : "sum over v|p is " + total.str() + ", required " + required.str();
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"benard_schacher", true, true,
                          "uniform local order and cyclotomic twist over p, per vector"};
        if (!benard_schacher_filter(scenario, jl)) {
            c.passed = false;
            c.detail = "jl vector violates the uniform-order/twist conditions over p";
        } else if (!benard_schacher_filter(scenario, lp)) {
            c.passed = false;
            c.detail = "lp vector violates the uniform-order/twist conditions over p";
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"torsion_bound", true, true, "invariants over p are gcd(n, p-1)-torsion"};
        if (!torsion_filter(scenario, jl)) {
            c.passed = false;
            c.detail = "jl vector exceeds the gcd(n, p-1) torsion bound at a place over p";
        } else if (!torsion_filter(scenario, lp)) {
            c.passed = false;
            c.detail = "lp vector exceeds the gcd(n, p-1) torsion bound at a place over p";
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"reciprocity", true, true, "each vector satisfies the exact-sequence contract"};
        for (const auto* vec : {&jl, &lp}) {
            try {
                CsaClass::make(K, *vec);
            } catch (const std::invalid_argument& err) {
                c.passed = false;
                c.detail = std::string(vec == &jl ? "jl" : "lp") + ": " + err.what();
                break;
            }
        }
        checks.push_back(std::move(c));
    }

    {
        ConstraintCheck c{"conjecture", scenario.conjecture_mode, true, "self-duality conjecture cases at p"};
        if (scenario.conjecture_mode && !conjecture_filter(scenario, jl, lp)) {
            c.passed = false;
            c.detail = "pair violates the conjectural relation at p";
        }
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace detail

/// Machine-readable pass/fail per constraint for an arbitrary pair of raw
/// invariant vectors over the scenario field. Unknown places throw.
inline CheckReport check_pair(const ConstraintScenario& scenario, const InvariantVector& jl,
                              const InvariantVector& lp) {
    for (const auto* vec : {&jl, &lp}) {
        for (const auto& [v, inv] : *vec) {
            if (!scenario.field.is_valid_place(v))
                throw std::invalid_argument("check_pair: unknown place " + v.str() + " for the scenario field");
        }
    }
    CheckReport report;
    report.checks = detail::evaluate_constraints(scenario, jl, lp);
    for (const auto& c : report.checks) report.accepted &= !c.applicable || c.passed;
    return report;
}

inline CheckReport check_pair(const ConstraintScenario& scenario, const InvariantPair& pair) {
    if (!(pair.jl.field() == scenario.field) || !(pair.lp.field() == scenario.field))
        throw std::invalid_argument("check_pair: pair is not defined over the scenario field");
    return check_pair(scenario, pair.jl.invariants(), pair.lp.invariants());
}

struct SolutionSet {
    ConstraintScenario scenario;
    std::vector<InvariantPair> solutions;  // canonical (lexicographic) order
    enum class Status { consistent, inconsistent } status = Status::consistent;
    std::string violated_constraint;  // first unsatisfiable constraint when inconsistent
    std::map<Place, CyclicRational> forced;  // per-place forced pair sums
    CyclicRational p_fiber_sum;              // required total over v | p
    std::uint64_t candidates = 0;            // size of the search grid
};

/// Number of grid candidates enumerate_solutions would visit: per place
/// over p both coordinates range over the torsion-admissible values, real
/// places contribute the four half-integral pairs, complex places are
/// pinned to zero, and extra-support places contribute the torsion-cap
/// values (the partner is forced by the away constraint).
inline std::uint64_t grid_candidate_count(const ConstraintScenario& scenario) {
    if (scenario.dimension == 1) return 1;
    unsigned __int128 count = 1;
    const std::uint64_t limit = UINT64_MAX;
    i64 t = std::gcd(std::gcd(scenario.dimension, scenario.residue_char - 1), scenario.torsion_cap);
    for (std::size_t i = 0; i < scenario.field.places_over(scenario.residue_char).size(); ++i) {
        count *= static_cast<unsigned __int128>(t) * static_cast<unsigned __int128>(t);
        if (count > limit) return limit;
    }
    for (const Place& v : scenario.field.archimedean_places()) {
        count *= v.kind == Place::Kind::real ? 4 : 1;
        if (count > limit) return limit;
    }
    for (std::size_t i = 0; i < scenario.extra_support.size(); ++i) {
        count *= static_cast<unsigned __int128>(scenario.torsion_cap);
        if (count > limit) return limit;
    }
    return static_cast<std::uint64_t>(count);
}

/// Enumerates every admissible pair of invariant vectors. The search space
/// is the finite grid described in grid_candidate_count; every candidate
/// runs through the same constraint evaluation as check_pair. When the
/// admissible set is empty the first unsatisfiable constraint (in the fixed
/// evaluation order) is reported.
inline SolutionSet enumerate_solutions(const ConstraintScenario& scenario,
                                       std::uint64_t max_candidates = 1'000'000) {
    SolutionSet out{scenario, {}, SolutionSet::Status::consistent, "", {}, CyclicRational(), 0};
    out.candidates = grid_candidate_count(scenario);
    if (out.candidates > max_candidates)
        throw std::invalid_argument("enumerate_solutions: search space of " + std::to_string(out.candidates) +
                                    " candidates exceeds the cap of " + std::to_string(max_candidates));

    const AbelianField& K = scenario.field;
    const bool degenerate = scenario.dimension == 1;
    std::vector<Place> fiber = K.places_over(scenario.residue_char);
    std::vector<Place> arch = K.archimedean_places();

    out.p_fiber_sum = degenerate ? CyclicRational() : required_p_fiber_sum(scenario);
    for (const Place& v : arch) {
        out.forced[v] = degenerate ? CyclicRational()
                                   : (v.kind == Place::Kind::complex ? CyclicRational()
                                                                     : required_sum_archimedean(scenario, v));
    }
    for (const Place& v : scenario.extra_support) out.forced[v] = CyclicRational();
    if (fiber.size() == 1) out.forced[fiber.front()] = out.p_fiber_sum;

    // Slot grids: each slot is a list of (jl value, lp value) options.
    using Options = std::vector<std::pair<CyclicRational, CyclicRational>>;
    std::vector<Place> slots;
    std::vector<Options> grids;
    if (!degenerate) {
        i64 t = std::gcd(std::gcd(scenario.dimension, scenario.residue_char - 1), scenario.torsion_cap);
        Options fiber_options;
        for (i64 a = 0; a < t; ++a) {
            for (i64 b = 0; b < t; ++b) fiber_options.emplace_back(CyclicRational(a, t), CyclicRational(b, t));
        }
        for (const Place& v : fiber) {
            slots.push_back(v);
            grids.push_back(fiber_options);
        }
        Options real_options;
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) real_options.emplace_back(CyclicRational(a, 2), CyclicRational(b, 2));
        }
        for (const Place& v : arch) {
            slots.push_back(v);
            grids.push_back(v.kind == Place::Kind::real ? real_options
                                                        : Options{{CyclicRational(), CyclicRational()}});
        }
        for (const Place& v : scenario.extra_support) {
            Options extra_options;
            for (i64 a = 0; a < scenario.torsion_cap; ++a)
                extra_options.emplace_back(CyclicRational(a, scenario.torsion_cap),
                                           -CyclicRational(a, scenario.torsion_cap));
            slots.push_back(v);
            grids.push_back(std::move(extra_options));
        }
    }

    InvariantVector jl, lp;
    std::size_t deepest_failure = 0;  // max over candidates of the first failing check index
    auto leaf = [&]() {
        std::vector<ConstraintCheck> checks = detail::evaluate_constraints(scenario, jl, lp);
        std::size_t first_fail = checks.size();
        for (std::size_t i = 0; i < checks.size(); ++i) {
            if (checks[i].applicable && !checks[i].passed) {
                first_fail = i;
                break;
            }
        }
        if (first_fail == checks.size()) {
            out.solutions.push_back(InvariantPair{CsaClass::make(K, jl), CsaClass::make(K, lp)});
        } else {
            // The first unsatisfiable constraint is the one at which the
            // best-surviving candidate dies.
            deepest_failure = std::max(deepest_failure, first_fail + 1);
        }
    };
    auto recurse = [&](auto&& self, std::size_t slot) -> void {
        if (slot == slots.size()) {
            leaf();
            return;
        }
        for (const auto& [a, b] : grids[slot]) {
            if (!a.is_zero()) jl[slots[slot]] = a;
            if (!b.is_zero()) lp[slots[slot]] = b;
            self(self, slot + 1);
            jl.erase(slots[slot]);
            lp.erase(slots[slot]);
        }
    };
    recurse(recurse, 0);

    std::sort(out.solutions.begin(), out.solutions.end(), [](const InvariantPair& x, const InvariantPair& y) {
        if (x.jl.invariants() != y.jl.invariants()) return x.jl.invariants() < y.jl.invariants();
        return x.lp.invariants() < y.lp.invariants();
    });

    if (out.solutions.empty()) {
        out.status = SolutionSet::Status::inconsistent;
        std::vector<ConstraintCheck> names = detail::evaluate_constraints(scenario, {}, {});
        out.violated_constraint = names[deepest_failure == 0 ? 0 : deepest_failure - 1].name;
    }
    return out;
}

}  // namespace hasse
