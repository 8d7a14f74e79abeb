// Acceptance suite: runs each top-level criterion end to end and prints one
// PASS/FAIL line per criterion. All checks are exact (integer/rational
// arithmetic); there are no numeric tolerances anywhere.
//
// Criterion 2 is reported in two forms. The mod-4 shorthand
// ("splits iff d < 0 and d = 2,3 mod 4") is stated in the source material
// but is not the correct splitting law: it misses the imaginary fields in
// which 2 is inert (d = 5 mod 8), e.g. Q(sqrt(-3)) = Q(i+j+k) inside the
// Hamilton quaternions. The suite runs the shorthand verbatim, reports its
// mismatches, and separately checks the full 2-adic criterion
// (d < 0 and d != 1 mod 8), which the library satisfies exhaustively.

#include "hasse/hasse.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace hasse;

namespace {

int unexpected_failures = 0;
int documented_failures = 0;
int passed = 0;

void report(const std::string& label, bool ok, const std::string& note = "",
            bool failure_is_documented = false) {
    if (ok) {
        ++passed;
        std::printf("[PASS] %s%s%s\n", label.c_str(), note.empty() ? "" : " -- ", note.c_str());
    } else if (failure_is_documented) {
        ++documented_failures;
        std::printf("[FAIL] %s%s%s (documented defect in the stated criterion; see the corrected form below)\n",
                    label.c_str(), note.empty() ? "" : " -- ", note.c_str());
    } else {
        ++unexpected_failures;
        std::printf("[FAIL] %s%s%s\n", label.c_str(), note.empty() ? "" : " -- ", note.c_str());
    }
    std::fflush(stdout);
}

// ---- shared fixtures --------------------------------------------------

// Twenty abelian fields of degree <= 4.
std::vector<AbelianField> field_battery() {
    return {
        AbelianField::rationals(),
        AbelianField::cyclotomic(4),    // Q(i)
        AbelianField::quadratic(2),     // real quadratics
        AbelianField::quadratic(3),
        AbelianField::quadratic(5),
        AbelianField::quadratic(6),
        AbelianField::quadratic(7),
        AbelianField::quadratic(-2),    // imaginary quadratics
        AbelianField::quadratic(-3),
        AbelianField::quadratic(-5),
        AbelianField::quadratic(-7),
        AbelianField::cyclotomic(5),    // quartic cyclotomic
        AbelianField::cyclotomic(8),
        AbelianField::cyclotomic(12),
        AbelianField::make(16, {15}),   // real quartic: Q(zeta_16)+
        AbelianField::make(24, {23}),   // real quartic: Q(sqrt 2, sqrt 3)
        AbelianField::make(15, {14}),   // real quartic: Q(zeta_15)+
        AbelianField::make(7, {6}),     // real cubics
        AbelianField::make(9, {8}),
        AbelianField::make(13, {5}),
    };
}

const std::vector<i64> kBatteryPrimes{2, 3, 5, 7, 11, 13};

// Flat generate-and-test over the declared grid, with check_pair as the
// acceptance predicate; the completeness oracle for enumerate_solutions.
std::vector<InvariantPair> naive_solutions(const ConstraintScenario& scenario) {
    const AbelianField& K = scenario.field;
    std::vector<Place> slots;
    std::vector<std::vector<std::pair<CyclicRational, CyclicRational>>> grids;
    if (scenario.dimension > 1) {
        i64 t = std::gcd(std::gcd(scenario.dimension, scenario.residue_char - 1), scenario.torsion_cap);
        for (const Place& v : K.places_over(scenario.residue_char)) {
            std::vector<std::pair<CyclicRational, CyclicRational>> opts;
            for (i64 a = 0; a < t; ++a)
                for (i64 b = 0; b < t; ++b) opts.emplace_back(CyclicRational(a, t), CyclicRational(b, t));
            slots.push_back(v);
            grids.push_back(std::move(opts));
        }
        for (const Place& v : K.archimedean_places()) {
            std::vector<std::pair<CyclicRational, CyclicRational>> opts;
            if (v.kind == Place::Kind::real) {
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) opts.emplace_back(CyclicRational(a, 2), CyclicRational(b, 2));
            } else {
                opts.emplace_back(CyclicRational(), CyclicRational());
            }
            slots.push_back(v);
            grids.push_back(std::move(opts));
        }
        for (const Place& v : scenario.extra_support) {
            std::vector<std::pair<CyclicRational, CyclicRational>> opts;
            for (i64 a = 0; a < scenario.torsion_cap; ++a)
                opts.emplace_back(CyclicRational(a, scenario.torsion_cap),
                                  -CyclicRational(a, scenario.torsion_cap));
            slots.push_back(v);
            grids.push_back(std::move(opts));
        }
    }
    std::vector<InvariantPair> accepted;
    std::vector<std::size_t> index(slots.size(), 0);
    while (true) {
        InvariantVector jl, lp;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto& [a, b] = grids[s][index[s]];
            if (!a.is_zero()) jl[slots[s]] = a;
            if (!b.is_zero()) lp[slots[s]] = b;
        }
        if (check_pair(scenario, jl, lp).accepted)
            accepted.push_back(InvariantPair{CsaClass::make(K, jl), CsaClass::make(K, lp)});
        std::size_t s = 0;
        for (; s < slots.size(); ++s) {
            if (++index[s] < grids[s].size()) break;
            index[s] = 0;
        }
        if (s == slots.size()) break;
    }
    std::sort(accepted.begin(), accepted.end(), [](const InvariantPair& x, const InvariantPair& y) {
        if (x.jl.invariants() != y.jl.invariants()) return x.jl.invariants() < y.jl.invariants();
        return x.lp.invariants() < y.lp.invariants();
    });
    return accepted;
}

// Self-dual scenario battery: every totally real battery field, both
// self-dual types, n = 2, all battery primes. Non-real fields enter with
// the not_self_dual type (used by the oracle-equivalence criterion).
std::vector<ConstraintScenario> scenario_battery(bool include_not_self_dual) {
    std::vector<ConstraintScenario> out;
    for (const AbelianField& K : field_battery()) {
        for (i64 p : kBatteryPrimes) {
            if (K.is_totally_real()) {
                out.push_back(ConstraintScenario::make(2, p, K, DualityType::symplectic));
                out.push_back(ConstraintScenario::make(2, p, K, DualityType::orthogonal));
            }
            if (include_not_self_dual) {
                out.push_back(ConstraintScenario::make(2, p, K, DualityType::not_self_dual));
                out.push_back(ConstraintScenario::make(3, p, K, DualityType::not_self_dual));
            }
        }
    }
    return out;
}

// ---- criteria ----------------------------------------------------------

void criterion_1_quaternion_golden() {
    CsaClass h = quaternion_class(-1, -1);
    bool ok = h.invariants().size() == 2 && h.invariant_at(Place::finite(2)) == CyclicRational::half() &&
              h.invariant_at(Place::real()) == CyclicRational::half() && h.index() == 2;
    report("criterion 1: quaternion golden values inv_2 = inv_inf = 1/2, index 2", ok);
}

void criterion_2_quadratic_splitting() {
    CsaClass h = quaternion_class(-1, -1);
    std::vector<i64> shorthand_mismatches;
    int full_mismatches = 0;
    for (i64 d = -50; d <= 50; ++d) {
        if (d == 0 || d == 1 || !is_squarefree(d)) continue;
        bool computed = h.splits_over(AbelianField::quadratic(d)).splits;
        bool shorthand = d < 0 && (mod_reduce(d, 4) == 2 || mod_reduce(d, 4) == 3);
        bool full = d < 0 && mod_reduce(d, 8) != 1;
        if (computed != shorthand) shorthand_mismatches.push_back(d);
        if (computed != full) ++full_mismatches;
    }
    std::string note = "mismatches at d =";
    for (i64 d : shorthand_mismatches) note += " " + std::to_string(d);
    note += " (imaginary fields with 2 inert: d = 5 mod 8, where the local degree at 2 is 2 and the "
            "algebra splits, e.g. Q(sqrt(-3)) = Q(i+j+k) inside the quaternions)";
    report("criterion 2 (as stated): splits_over(H, Q(sqrt d)) iff d < 0 and d = 2,3 (mod 4), |d| <= 50",
           shorthand_mismatches.empty(), shorthand_mismatches.empty() ? "" : note,
           /*failure_is_documented=*/true);
    report("criterion 2 (corrected 2-adic form): splits_over(H, Q(sqrt d)) iff d < 0 and d != 1 (mod 8), |d| <= 50",
           full_mismatches == 0, "100% agreement of the computed splitting with the 2-adic criterion");
}

void criterion_3_symbol_oracle_grid() {
    std::vector<Place> places{Place::real()};
    for (i64 p : primes_upto(50)) places.push_back(Place::finite(p));
    long long mismatches = 0, reciprocity_failures = 0, checked = 0;
    for (i64 a = -30; a <= 30; ++a) {
        if (a == 0) continue;
        for (i64 b = -30; b <= 30; ++b) {
            if (b == 0) continue;
            int product = 1;
            for (const Place& v : places) {
                int closed = hilbert_symbol(a, b, v);
                int oracle = local_solubility_oracle(a, b, v);
                if (closed != oracle) ++mismatches;
                product *= closed;
                ++checked;
            }
            if (product != 1) ++reciprocity_failures;
        }
    }
    report("criterion 3: closed-form symbol = solubility oracle and Hilbert reciprocity, |a|,|b| <= 30, p <= 50",
           mismatches == 0 && reciprocity_failures == 0,
           std::to_string(checked) + " symbol comparisons, " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(reciprocity_failures) + " reciprocity failures");
}

void criterion_4_q8_pipeline() {
    CharacterTable q8 = character_table(FiniteGroup::quaternion8());
    bool ok = q8.characters.size() == 5;
    const CharacterRow& two = q8.characters.back();
    ok &= two.degree == 2;
    const i64 e = q8.exponent;
    ok &= two.values[0] == CyclotomicNumber::from_rational(e, 2) &&
          two.values[1] == CyclotomicNumber::from_rational(e, -2) &&
          two.values[2] == CyclotomicNumber(e) && two.values[3] == CyclotomicNumber(e) &&
          two.values[4] == CyclotomicNumber(e);
    ok &= field_of_rationality(q8, 4) == AbelianField::rationals();
    ok &= frobenius_schur_indicator(q8, 4) == -1;

    SchurCertificate cert = schur_index_quaternion_case(q8, 4);
    ok &= cert.status == SchurCertificate::Status::computed && cert.brauer_class.has_value() &&
          *cert.brauer_class == quaternion_class(-1, -1);

    // C4 acting by the rotation matrix: center Q(i), rationality field Q.
    auto r = [](i64 v) { return CyclotomicNumber::from_rational(1, v); };
    MatrixRep rotation = MatrixRep::from_generator_images(FiniteGroup::cyclic(4), 1,
                                                          {{1, CycloMatrix{{r(0), r(1)}, {r(-1), r(0)}}}});
    CenterCheckResult c4 = enveloping_center_check(character_table(FiniteGroup::cyclic(4)), rotation);
    ok &= c4.center_is_field && c4.center_field.has_value() &&
          *c4.center_field == AbelianField::cyclotomic(4) &&
          c4.rationality_field == AbelianField::rationals() && !c4.center_equals_rationality_field;

    report("criterion 4: Q8 pipeline (table row (2,-2,0,0,0), Q(chi) = Q, FS = -1, class of (-1,-1)) and the "
           "C4 rotation center Q(i) != Q(pi) = Q",
           ok);
}

void criterion_5_constraint_engine() {
    // The unique-prime scenario over Q.
    ConstraintScenario easy = ConstraintScenario::make(2, 3, AbelianField::rationals(), DualityType::symplectic);
    SolutionSet sol = enumerate_solutions(easy);
    Place p3 = Place::finite(3);
    bool ok = sol.status == SolutionSet::Status::consistent && sol.p_fiber_sum == CyclicRational::half() &&
              sol.solutions.size() == 2 && sol.solutions[0].jl.invariant_at(p3) == CyclicRational() &&
              sol.solutions[0].lp.invariant_at(p3) == CyclicRational::half() &&
              sol.solutions[1].jl.invariant_at(p3) == CyclicRational::half() &&
              sol.solutions[1].lp.invariant_at(p3) == CyclicRational();

    // The odd-fiber equation on every self-dual battery scenario.
    long long scenarios_with_odd_fiber = 0, solutions_checked = 0, violations = 0;
    for (const ConstraintScenario& s : scenario_battery(/*include_not_self_dual=*/false)) {
        i64 g = s.field.decompose_prime(s.residue_char).g;
        if (g % 2 == 0) continue;
        ++scenarios_with_odd_fiber;
        CyclicRational required = Integer(s.field.degree()) * CyclicRational::half();
        for (const InvariantPair& pair : enumerate_solutions(s, 5'000'000).solutions) {
            for (const Place& v : s.field.places_over(s.residue_char)) {
                ++solutions_checked;
                if (!(pair.jl.invariant_at(v) + pair.lp.invariant_at(v) == required)) ++violations;
            }
        }
    }
    ok &= violations == 0 && scenarios_with_odd_fiber > 0 && solutions_checked > 0;
    report("criterion 5: unique-prime scenario forces sum 1/2 with solutions {(0,1/2),(1/2,0)}; the odd-fiber "
           "equation holds across the battery",
           ok,
           std::to_string(scenarios_with_odd_fiber) + " odd-fiber self-dual scenarios, " +
               std::to_string(solutions_checked) + " per-place checks, " + std::to_string(violations) +
               " violations");
}

void criterion_6_engine_oracle() {
    long long scenarios = 0, discrepancies = 0, skipped = 0;
    for (ConstraintScenario s : scenario_battery(/*include_not_self_dual=*/true)) {
        if (grid_candidate_count(s) > 10'000) {
            ++skipped;
            continue;
        }
        ++scenarios;
        SolutionSet sol = enumerate_solutions(s, 10'000);
        std::vector<InvariantPair> expected = naive_solutions(s);
        bool same = sol.solutions.size() == expected.size();
        for (std::size_t i = 0; same && i < expected.size(); ++i) same = sol.solutions[i] == expected[i];
        if (!same) ++discrepancies;
    }
    report("criterion 6: enumerate equals naive generate-and-test on every battery scenario with <= 10^4 candidates",
           scenarios > 0 && discrepancies == 0,
           std::to_string(scenarios) + " scenarios compared (" + std::to_string(skipped) + " above the bound), " +
               std::to_string(discrepancies) + " discrepancies");
}

void criterion_7_property_suites() {
    // Exact-sequence validation on every quaternion class of the grid.
    bool classes_ok = true;
    for (i64 a = -20; a <= 20 && classes_ok; ++a) {
        if (a == 0) continue;
        for (i64 b = -20; b <= 20 && classes_ok; ++b) {
            if (b == 0) continue;
            try {
                quaternion_class(a, b);  // constructor runs the validator
            } catch (const std::exception&) {
                classes_ok = false;
            }
        }
    }

    // Character-table orthogonality and involution counts.
    bool tables_ok = true;
    for (const char* name : {"trivial", "C2", "C4", "C6", "C12", "D4", "D5", "D6", "Q8", "S3", "S4", "S5"}) {
        FiniteGroup g = FiniteGroup::builtin(name);
        CharacterTable t = character_table(g);
        tables_ok &= verify_row_orthogonality(t) && verify_column_orthogonality(t);
        i64 fs_sum = 0;
        for (std::size_t row = 0; row < t.characters.size(); ++row)
            fs_sum += frobenius_schur_indicator(t, row) * t.characters[row].degree;
        i64 sqrt1 = 0;
        for (std::size_t x = 0; x < g.order(); ++x)
            sqrt1 += g.mul(static_cast<int>(x), static_cast<int>(x)) == g.identity();
        tables_ok &= fs_sum == sqrt1;
    }

    // efg = [K:Q] across the whole battery.
    bool efg_ok = true;
    for (const AbelianField& K : field_battery()) {
        for (i64 p : kBatteryPrimes) {
            PrimeDecomposition dec = K.decompose_prime(p);
            efg_ok &= dec.e * dec.f * dec.g == K.degree();
            efg_ok &= static_cast<i64>(dec.places.size()) == dec.g;
        }
    }

    // Benard-Schacher twist fixtures over Q(i).
    ConstraintScenario qi = ConstraintScenario::make(4, 5, AbelianField::cyclotomic(4), DualityType::not_self_dual);
    auto places = qi.field.places_over(5);
    bool bs_ok = places.size() == 2;
    if (bs_ok) {
        bs_ok &= benard_schacher_filter(qi, {{places[0], CyclicRational(1, 4)}, {places[1], CyclicRational(3, 4)}});
        bs_ok &= benard_schacher_filter(qi, {{places[0], CyclicRational(3, 4)}, {places[1], CyclicRational(1, 4)}});
        bs_ok &= !benard_schacher_filter(qi, {{places[0], CyclicRational(1, 4)}, {places[1], CyclicRational(1, 4)}});
        bs_ok &= !benard_schacher_filter(qi, {{places[0], CyclicRational(1, 4)}, {places[1], CyclicRational(1, 2)}});
        bs_ok &= benard_schacher_filter(qi, {{places[0], CyclicRational(1, 2)}, {places[1], CyclicRational(1, 2)}});
    }

    report("criterion 7: property suites (class validation, orthogonality + involution counts, efg = degree, "
           "Benard-Schacher fixtures)",
           classes_ok && tables_ok && efg_ok && bs_ok);
}

}  // namespace

int main() {
    criterion_1_quaternion_golden();
    criterion_2_quadratic_splitting();
    criterion_3_symbol_oracle_grid();
    criterion_4_q8_pipeline();
    criterion_5_constraint_engine();
    criterion_6_engine_oracle();
    criterion_7_property_suites();

    std::printf("acceptance: %d passed, %d failed, %d failed-as-documented\n", passed, unexpected_failures,
                documented_failures);
    return unexpected_failures == 0 ? 0 : 1;
}
