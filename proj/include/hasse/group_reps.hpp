#pragma once

// Rationality data of finite-group representations: fields of rationality
// of characters, Frobenius-Schur indicators, the center of the Q-span of a
// matrix representation, and the explicit quaternion certificate for
// 2-dimensional rational-character representations.

#include "hasse/abelian_field.hpp"
#include "hasse/brauer.hpp"
#include "hasse/character_table.hpp"
#include "hasse/cyclotomic.hpp"
#include "hasse/finite_group.hpp"
#include "hasse/quaternion.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hasse {

namespace detail {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// In-place row reduction over Q; rows are resized to the rank. Returns the
// pivot column of each surviving row.
inline std::vector<std::size_t> rref_q(QMat& rows) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        Rational inv = Rational(1) / rows[rank][c];
        for (Rational& x : rows[rank]) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rational factor = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

// Basis of {x : M x = 0} for the row-space interpretation rows * x = 0.
inline QMat nullspace_q(QMat rows) {
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    std::vector<std::size_t> pivots = rref_q(rows);
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    QMat basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        QVec v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solves sum_i x_i basis[i] = target exactly; throws if inconsistent.
inline QVec solve_in_basis(const QMat& basis, const QVec& target) {
    const std::size_t n = basis.size();
    const std::size_t cols = target.size();
    QMat aug(cols, QVec(n + 1, Rational(0)));
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug[j][i] = basis[i][j];
        aug[j][n] = target[j];
    }
    std::vector<std::size_t> pivots = rref_q(aug);
    QVec x(n, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) throw std::logic_error("solve_in_basis: inconsistent system");
        x[pivots[r]] = aug[r][n];
    }
    return x;
}

}  // namespace detail

using CycloMatrix = std::vector<std::vector<CyclotomicNumber>>;

namespace detail {

inline CycloMatrix cyclo_identity(std::size_t d, i64 modulus) {
    CycloMatrix m(d, std::vector<CyclotomicNumber>(d, CyclotomicNumber(modulus)));
    for (std::size_t i = 0; i < d; ++i) m[i][i] = CyclotomicNumber::from_rational(modulus, 1);
    return m;
}

inline CycloMatrix cyclo_mul(const CycloMatrix& a, const CycloMatrix& b) {
    const std::size_t d = a.size();
    i64 modulus = a[0][0].modulus();
    CycloMatrix out(d, std::vector<CyclotomicNumber>(d, CyclotomicNumber(modulus)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

inline CycloMatrix cyclo_promote(const CycloMatrix& a, i64 modulus) {
    CycloMatrix out = a;
    for (auto& row : out) {
        for (auto& x : row) x = x.promoted(modulus);
    }
    return out;
}

inline QVec cyclo_flatten(const CycloMatrix& a) {
    QVec out;
    for (const auto& row : a) {
        for (const auto& x : row) {
            for (const Rational& c : x.coefficients()) out.push_back(c);
        }
    }
    return out;
}

}  // namespace detail

/// Stabilizer-based field of rationality of a class function with values in
/// Q(zeta_e): the subfield fixed by every b with chi(g^b) = chi(g).
inline AbelianField rationality_field_of_class_function(const FiniteGroup& group, i64 e,
                                                        const std::vector<CyclotomicNumber>& values) {
    std::vector<i64> stabilizer;
    for (i64 b = 0; b < std::max<i64>(e, 1); ++b) {
        if (std::gcd(b, e) != 1) continue;
        bool fixes = true;
        for (std::size_t k = 0; k < group.class_count() && fixes; ++k) {
            fixes = values[static_cast<std::size_t>(group.class_of_power(k, b))] == values[k];
        }
        if (fixes) stabilizer.push_back(b);
    }
    if (e == 1) stabilizer.push_back(0);
    return AbelianField::make(e, std::span<const i64>(stabilizer.data(), stabilizer.size()));
}

/// Field of rationality Q(chi) of an irreducible character, as a subfield
/// of Q(zeta_e) presented by conductor and subgroup.
inline AbelianField field_of_rationality(const CharacterTable& table, std::size_t row) {
    return rationality_field_of_class_function(table.group, table.exponent, table.characters.at(row).values);
}

/// Frobenius-Schur indicator (1/|G|) sum_g chi(g^2), in {-1, 0, +1}.
inline int frobenius_schur_indicator(const CharacterTable& table, std::size_t row) {
    const auto& chi = table.characters.at(row);
    CyclotomicNumber sum(table.exponent);
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
        sum += Rational(table.classes[k].size) * chi.values[static_cast<std::size_t>(table.group.class_of_power(k, 2))];
    }
    Rational value = sum.rational_value() / Rational(static_cast<i64>(table.group.order()));
    if (value == 1) return 1;
    if (value == -1) return -1;
    if (value == 0) return 0;
    throw std::logic_error("frobenius_schur_indicator: value outside {-1,0,1}");
}

/// A matrix representation with exact cyclotomic entries, one image per
/// group element.
struct MatrixRep {
    FiniteGroup group;
    i64 modulus = 1;
    std::size_t dim = 0;
    std::vector<CycloMatrix> images;

    /// Checks multiplicativity (exhaustively up to 64^2 products, sampled
    /// beyond) and the identity image.
    static MatrixRep from_images(FiniteGroup group, i64 modulus, std::vector<CycloMatrix> images) {
        const std::size_t n = group.order();
        if (images.size() != n) throw std::invalid_argument("MatrixRep: one image per group element required");
        const std::size_t d = images[0].size();
        for (const auto& m : images) {
            if (m.size() != d) throw std::invalid_argument("MatrixRep: image dimension mismatch");
            for (const auto& row : m) {
                if (row.size() != d) throw std::invalid_argument("MatrixRep: image not square");
            }
        }
        if (!(images[static_cast<std::size_t>(group.identity())] == detail::cyclo_identity(d, modulus)))
            throw std::invalid_argument("MatrixRep: identity does not map to the identity matrix");
        auto check = [&](std::size_t a, std::size_t b) {
            CycloMatrix prod = detail::cyclo_mul(images[a], images[b]);
            std::size_t ab = static_cast<std::size_t>(group.mul(static_cast<int>(a), static_cast<int>(b)));
            if (!(prod == images[ab]))
                throw std::invalid_argument("MatrixRep: multiplicativity spot-check fails");
        };
        if (n <= 64) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) check(a, b);
            }
        } else {
            for (std::size_t t = 0; t < 4096; ++t) check((t * 2654435761u) % n, (t * 40503u + 7) % n);
        }
        return MatrixRep{std::move(group), modulus, d, std::move(images)};
    }

    /// Completes generator images through the Cayley graph, then validates.
    static MatrixRep from_generator_images(FiniteGroup group, i64 modulus,
                                           const std::vector<std::pair<int, CycloMatrix>>& generators) {
        const std::size_t n = group.order();
        if (generators.empty()) throw std::invalid_argument("MatrixRep: no generators");
        const std::size_t d = generators[0].second.size();
        std::vector<CycloMatrix> images(n);
        std::vector<char> known(n, 0);
        images[static_cast<std::size_t>(group.identity())] = detail::cyclo_identity(d, modulus);
        known[static_cast<std::size_t>(group.identity())] = 1;
        std::vector<int> queue{group.identity()};
        while (!queue.empty()) {
            int x = queue.back();
            queue.pop_back();
            for (const auto& [g, mat] : generators) {
                int y = group.mul(x, g);
                if (known[static_cast<std::size_t>(y)]) continue;
                images[static_cast<std::size_t>(y)] = detail::cyclo_mul(images[static_cast<std::size_t>(x)], mat);
                known[static_cast<std::size_t>(y)] = 1;
                queue.push_back(y);
            }
        }
        for (char k : known) {
            if (!k) throw std::invalid_argument("MatrixRep: generators do not generate the group");
        }
        return from_images(std::move(group), modulus, std::move(images));
    }

    std::vector<CyclotomicNumber> character() const {
        std::vector<CyclotomicNumber> chi;
        for (std::size_t k = 0; k < group.class_count(); ++k) {
            CyclotomicNumber tr(modulus);
            const CycloMatrix& m = images[static_cast<std::size_t>(group.representative(k))];
            for (std::size_t i = 0; i < dim; ++i) tr += m[i][i];
            chi.push_back(tr);
        }
        return chi;
    }
};

struct CenterCheckResult {
    std::size_t span_dim = 0;    // dim_Q of the span of the image
    std::size_t center_dim = 0;  // dim_Q of its center
    bool center_is_field = false;
    std::optional<AbelianField> center_field;  // set when the center is a field
    AbelianField rationality_field = AbelianField::rationals();
    bool center_equals_rationality_field = false;
};

/// Computes the Q-span of the image, its center, and the field of
/// rationality of the (possibly reducible) representation; identifies the
/// center as an abelian field via the Galois orbit of the constituents and
/// cross-checks the dimensions against the linear algebra.
inline CenterCheckResult enveloping_center_check(const CharacterTable& table, const MatrixRep& rep) {
    if (!(rep.group == table.group)) throw std::invalid_argument("enveloping_center_check: group mismatch");
    const i64 e = table.exponent;
    const i64 big = std::lcm(e, rep.modulus);

    // Greedy basis of the Q-span of the image.
    detail::QMat reduced;
    std::vector<CycloMatrix> basis;
    for (std::size_t g = 0; g < rep.group.order(); ++g) {
        CycloMatrix m = detail::cyclo_promote(rep.images[g], big);
        detail::QMat candidate = reduced;
        candidate.push_back(detail::cyclo_flatten(m));
        if (detail::rref_q(candidate).size() > reduced.size()) {
            reduced = std::move(candidate);
            basis.push_back(std::move(m));
        }
    }
    CenterCheckResult result;
    result.span_dim = basis.size();

    // Center: X = sum c_i B_i with X B_j = B_j X for every basis element.
    const std::size_t s = basis.size();
    detail::QMat system;
    for (std::size_t j = 0; j < s; ++j) {
        std::vector<detail::QVec> commutators;
        for (std::size_t i = 0; i < s; ++i) {
            CycloMatrix lhs = detail::cyclo_mul(basis[i], basis[j]);
            CycloMatrix rhs = detail::cyclo_mul(basis[j], basis[i]);
            detail::QVec flat_l = detail::cyclo_flatten(lhs);
            detail::QVec flat_r = detail::cyclo_flatten(rhs);
            for (std::size_t t = 0; t < flat_l.size(); ++t) flat_l[t] -= flat_r[t];
            commutators.push_back(std::move(flat_l));
        }
        for (std::size_t coord = 0; coord < commutators[0].size(); ++coord) {
            detail::QVec row(s);
            bool nonzero = false;
            for (std::size_t i = 0; i < s; ++i) {
                row[i] = commutators[i][coord];
                nonzero |= row[i] != 0;
            }
            if (nonzero) system.push_back(std::move(row));
        }
    }
    result.center_dim = system.empty() ? s : detail::nullspace_q(std::move(system)).size();

    // Field of rationality of the total character, and the constituents.
    std::vector<CyclotomicNumber> chi_rho;
    for (const auto& v : rep.character()) chi_rho.push_back(v.promoted(big));
    result.rationality_field = rationality_field_of_class_function(rep.group, e, chi_rho);

    const std::size_t r = table.classes.size();
    std::vector<std::size_t> constituents;
    for (std::size_t c = 0; c < table.characters.size(); ++c) {
        CyclotomicNumber inner(big);
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t kinv = static_cast<std::size_t>(rep.group.class_of(rep.group.inverse(rep.group.representative(k))));
            inner += Rational(table.classes[k].size) * (chi_rho[k] * table.characters[c].values[kinv].promoted(big));
        }
        Rational mult = inner.rational_value() / Rational(static_cast<i64>(rep.group.order()));
        if (boost::multiprecision::denominator(mult) != 1 || mult < 0)
            throw std::logic_error("enveloping_center_check: non-integral constituent multiplicity");
        if (mult > 0) constituents.push_back(c);
    }
    if (constituents.empty()) throw std::logic_error("enveloping_center_check: no constituents");

    // Galois orbits of the constituents under chi |-> chi(.^b).
    std::vector<std::size_t> orbit_of(table.characters.size(), table.characters.size());
    std::size_t orbit_count = 0;
    for (std::size_t c : constituents) {
        if (orbit_of[c] != table.characters.size()) continue;
        std::size_t id = orbit_count++;
        for (i64 b = 0; b < std::max<i64>(e, 1); ++b) {
            if (std::gcd(b, e) != 1) continue;
            std::vector<CyclotomicNumber> twisted;
            for (std::size_t k = 0; k < r; ++k)
                twisted.push_back(table.characters[c].values[static_cast<std::size_t>(rep.group.class_of_power(k, b))]);
            for (std::size_t c2 : constituents) {
                if (table.characters[c2].values == twisted) orbit_of[c2] = id;
            }
        }
    }

    std::size_t expected_center = 0, expected_span = 0;
    for (std::size_t id = 0; id < orbit_count; ++id) {
        for (std::size_t c : constituents) {
            if (orbit_of[c] != id) continue;
            AbelianField f = field_of_rationality(table, c);
            expected_center += static_cast<std::size_t>(f.degree());
            expected_span += static_cast<std::size_t>(f.degree()) *
                             static_cast<std::size_t>(table.characters[c].degree * table.characters[c].degree);
            break;
        }
    }
    if (expected_center != result.center_dim || expected_span != result.span_dim)
        throw std::logic_error("enveloping_center_check: linear algebra disagrees with orbit decomposition");

    result.center_is_field = orbit_count == 1;
    if (result.center_is_field) result.center_field = field_of_rationality(table, constituents.front());
    result.center_equals_rationality_field =
        result.center_is_field && *result.center_field == result.rationality_field;
    return result;
}

struct SchurCertificate {
    enum class Status { computed, not_implemented };
    Status status = Status::not_implemented;
    std::optional<CsaClass> brauer_class;  // over Q, present when computed
};

/// For an irreducible rational-valued character: returns the Brauer class
/// of the enveloping algebra when the degree is 1 (always trivial) or 2
/// (quaternion structure computed from the group-algebra component);
/// degrees >= 3 report not_implemented.
inline SchurCertificate schur_index_quaternion_case(const CharacterTable& table, std::size_t row) {
    const auto& chi = table.characters.at(row);
    const std::size_t r = table.classes.size();
    std::vector<Rational> values(r);
    for (std::size_t k = 0; k < r; ++k) {
        if (!chi.values[k].is_rational())
            throw std::invalid_argument("schur_index_quaternion_case: character field must be Q");
        values[k] = chi.values[k].rational_value();
    }
    if (chi.degree == 1) return SchurCertificate{SchurCertificate::Status::computed, CsaClass::trivial(AbelianField::rationals())};
    if (chi.degree != 2) return SchurCertificate{};

    const FiniteGroup& G = table.group;
    const std::size_t n = G.order();
    const Rational scale = Rational(chi.degree) / Rational(static_cast<i64>(n));

    // Central idempotent e_chi, and the component A = e_chi Q[G].
    detail::QVec idem(n);
    for (std::size_t g = 0; g < n; ++g)
        idem[g] = scale * values[static_cast<std::size_t>(G.class_of(G.inverse(static_cast<int>(g))))];

    auto convolve = [&](const detail::QVec& u, const detail::QVec& v) {
        detail::QVec out(n, Rational(0));
        for (std::size_t x = 0; x < n; ++x) {
            if (u[x] == 0) continue;
            for (std::size_t y = 0; y < n; ++y) {
                if (v[y] == 0) continue;
                out[static_cast<std::size_t>(G.mul(static_cast<int>(x), static_cast<int>(y)))] += u[x] * v[y];
            }
        }
        return out;
    };

    detail::QMat reduced;
    detail::QMat basis;
    for (std::size_t g = 0; g < n && basis.size() < 4; ++g) {
        detail::QVec vec(n);
        for (std::size_t h = 0; h < n; ++h)
            vec[h] = idem[static_cast<std::size_t>(G.mul(static_cast<int>(h), G.inverse(static_cast<int>(g))))];
        detail::QMat candidate = reduced;
        candidate.push_back(vec);
        if (detail::rref_q(candidate).size() > reduced.size()) {
            reduced = std::move(candidate);
            basis.push_back(std::move(vec));
        }
    }
    if (basis.size() != 4) throw std::logic_error("schur_index_quaternion_case: component dimension is not 4");

    detail::QVec unit_coords = detail::solve_in_basis(basis, idem);

    // Reduced trace via the left regular representation on the component.
    auto reduced_trace = [&](const detail::QVec& coords) {
        Rational tr = 0;
        detail::QVec u(n, Rational(0));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t h = 0; h < n; ++h) u[h] += coords[i] * basis[i][h];
        }
        for (std::size_t i = 0; i < 4; ++i) tr += detail::solve_in_basis(basis, convolve(u, basis[i]))[i];
        return tr / 2;
    };

    detail::QMat trace_row(1, detail::QVec(4));
    for (std::size_t i = 0; i < 4; ++i) {
        detail::QVec ei(4, Rational(0));
        ei[i] = 1;
        trace_row[0][i] = reduced_trace(ei);
    }
    detail::QMat pure = detail::nullspace_q(trace_row);  // 3-dim traceless part
    if (pure.size() != 3) throw std::logic_error("schur_index_quaternion_case: traceless part is not 3-dimensional");

    auto as_vector = [&](const detail::QVec& coords) {
        detail::QVec u(n, Rational(0));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t h = 0; h < n; ++h) u[h] += coords[i] * basis[i][h];
        }
        return u;
    };
    // u^2 = q(u) * 1 for traceless u; returns q(u).
    auto square_scalar = [&](const detail::QVec& coords) {
        detail::QVec sq = detail::solve_in_basis(basis, convolve(as_vector(coords), as_vector(coords)));
        std::size_t anchor = 0;
        while (anchor < 4 && unit_coords[anchor] == 0) ++anchor;
        Rational alpha = sq[anchor] / unit_coords[anchor];
        for (std::size_t i = 0; i < 4; ++i) {
            if (sq[i] != alpha * unit_coords[i])
                throw std::logic_error("schur_index_quaternion_case: square of pure element is not scalar");
        }
        return alpha;
    };
    auto bilinear = [&](const detail::QVec& a, const detail::QVec& b) {
        detail::QVec sum(4);
        for (std::size_t i = 0; i < 4; ++i) sum[i] = a[i] + b[i];
        return (square_scalar(sum) - square_scalar(a) - square_scalar(b)) / 2;
    };

    // Orthogonalize the norm form on the pure part: diag(alpha, beta, *).
    auto pick_anisotropic = [&](std::vector<detail::QVec>& vecs) -> detail::QVec {
        for (const auto& v : vecs) {
            if (square_scalar(v) != 0) return v;
        }
        for (std::size_t i = 0; i < vecs.size(); ++i) {
            for (std::size_t j = i + 1; j < vecs.size(); ++j) {
                detail::QVec sum(4);
                for (std::size_t t = 0; t < 4; ++t) sum[t] = vecs[i][t] + vecs[j][t];
                if (square_scalar(sum) != 0) return sum;
            }
        }
        throw std::logic_error("schur_index_quaternion_case: norm form is degenerate");
    };

    std::vector<detail::QVec> vecs(pure.begin(), pure.end());
    detail::QVec u1 = pick_anisotropic(vecs);
    Rational alpha = square_scalar(u1);
    std::vector<detail::QVec> rest;
    for (const auto& v : vecs) {
        Rational c = bilinear(v, u1) / alpha;
        detail::QVec w(4);
        bool zero = true;
        for (std::size_t t = 0; t < 4; ++t) {
            w[t] = v[t] - c * u1[t];
            zero &= w[t] == 0;
        }
        if (!zero) rest.push_back(std::move(w));
    }
    detail::QVec u2 = pick_anisotropic(rest);
    Rational beta = square_scalar(u2);

    // Clear denominators and square factors; (a,b) only depends on the
    // square classes.
    auto to_symbol_slot = [](const Rational& q) -> std::optional<i64> {
        Integer v = boost::multiprecision::numerator(q) * boost::multiprecision::denominator(q);
        if (v > 1'000'000'000'000LL || v < -1'000'000'000'000LL) return std::nullopt;
        return squarefree_kernel(v.convert_to<i64>());
    };
    std::optional<i64> a_slot = to_symbol_slot(alpha);
    std::optional<i64> b_slot = to_symbol_slot(beta);
    if (!a_slot || !b_slot) return SchurCertificate{};
    return SchurCertificate{SchurCertificate::Status::computed, quaternion_class(*a_slot, *b_slot)};
}

}  // namespace hasse
