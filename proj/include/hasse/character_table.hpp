#pragma once

// Exact character tables by Dixon's method: the class-sum matrices are
// simultaneously diagonalized over F_ell for a prime ell = 1 (mod e)
// exceeding 2*|G|*sqrt(|G|), and the eigenvalue data is lifted to Q(zeta_e)
// through multiplicities extracted against a fixed primitive e-th root of
// unity mod ell. No floating point is involved anywhere.

#include "hasse/arith.hpp"
#include "hasse/cyclotomic.hpp"
#include "hasse/finite_group.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace hasse {

struct ClassInfo {
    int representative = 0;
    i64 size = 1;
    i64 element_order = 1;
};

struct CharacterRow {
    i64 degree = 1;
    std::vector<CyclotomicNumber> values;  // one per conjugacy class
};

struct CharacterTable {
    FiniteGroup group;
    i64 exponent = 1;
    std::vector<ClassInfo> classes;
    std::vector<CharacterRow> characters;  // sorted by (degree, value key)
};

namespace detail {

using ModRow = std::vector<i64>;
using ModMatrix = std::vector<ModRow>;

// In-place row reduction mod ell; returns pivot column per row.
inline std::vector<std::size_t> rref_mod(ModMatrix& rows, i64 ell) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        i64 inv = inv_mod(rows[rank][c], ell);
        for (i64& x : rows[rank]) x = mul_mod(x, inv, ell);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            i64 factor = rows[r][c];
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] = mod_reduce(rows[r][j] - mul_mod(factor, rows[rank][j], ell), ell);
        }
        pivots.push_back(c);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

inline i64 det_mod(ModMatrix m, i64 ell) {
    const std::size_t n = m.size();
    i64 det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && m[sel][c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(m[sel], m[c]);
            det = mod_reduce(-det, ell);
        }
        det = mul_mod(det, m[c][c], ell);
        i64 inv = inv_mod(m[c][c], ell);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            i64 factor = mul_mod(m[r][c], inv, ell);
            for (std::size_t j = c; j < n; ++j)
                m[r][j] = mod_reduce(m[r][j] - mul_mod(factor, m[c][j], ell), ell);
        }
    }
    return det;
}

// Characteristic polynomial det(xI - C) mod ell by Newton interpolation
// on d+1 sample points.
inline std::vector<i64> char_poly_mod(const ModMatrix& c, i64 ell) {
    const std::size_t d = c.size();
    std::vector<i64> xs(d + 1), ys(d + 1);
    for (std::size_t s = 0; s <= d; ++s) {
        xs[s] = static_cast<i64>(s) % ell;
        ModMatrix m(d, ModRow(d));
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j)
                m[i][j] = mod_reduce((i == j ? xs[s] : 0) - c[i][j], ell);
        }
        ys[s] = det_mod(std::move(m), ell);
    }
    // Divided differences, then expansion of the Newton form.
    std::vector<i64> dd = ys;
    for (std::size_t level = 1; level <= d; ++level) {
        for (std::size_t i = d + 1; i-- > level;) {
            i64 num = mod_reduce(dd[i] - dd[i - 1], ell);
            i64 den = mod_reduce(xs[i] - xs[i - level], ell);
            dd[i] = mul_mod(num, inv_mod(den, ell), ell);
        }
    }
    std::vector<i64> poly{dd[d]};  // ascending coefficients
    for (std::size_t i = d; i-- > 0;) {
        std::vector<i64> q(poly.size() + 1, 0);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            q[j + 1] = mod_reduce(q[j + 1] + poly[j], ell);
            q[j] = mod_reduce(q[j] - mul_mod(xs[i], poly[j], ell), ell);
        }
        q[0] = mod_reduce(q[0] + dd[i], ell);
        poly = std::move(q);
    }
    return poly;
}

inline i64 eval_poly_mod(const std::vector<i64>& poly, i64 x, i64 ell) {
    i64 acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;) acc = mod_reduce(mul_mod(acc, x, ell) + poly[i], ell);
    return acc;
}

inline i64 find_primitive_root(i64 ell) {
    std::vector<i64> prime_factors;
    for (auto [p, e] : factor(ell - 1)) prime_factors.push_back(p);
    for (i64 g = 2; g < ell; ++g) {
        bool primitive = true;
        for (i64 q : prime_factors) {
            if (pow_mod(g, (ell - 1) / q, ell) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("find_primitive_root: none found");
}

}  // namespace detail

/// Complete exact character table. The group order must not exceed the cap.
inline CharacterTable character_table(const FiniteGroup& group, std::size_t order_cap = FiniteGroup::kMaxOrder) {
    if (group.order() > order_cap) throw std::invalid_argument("character_table: group order exceeds cap");
    const i64 n = static_cast<i64>(group.order());
    const i64 e = group.exponent();
    const std::size_t r = group.class_count();

    CharacterTable out{group, e, {}, {}};
    for (std::size_t k = 0; k < r; ++k) {
        out.classes.push_back(ClassInfo{group.representative(k), group.class_size(k),
                                        group.element_order(group.representative(k))});
    }

    // Least prime ell = 1 (mod e) with ell^2 > 4 n^3, separating eigenvalues.
    i64 ell = 0;
    for (i64 cand = e + 1;; cand += e) {
        if (static_cast<__int128>(cand) * cand > static_cast<__int128>(4) * n * n * n && is_prime(cand)) {
            ell = cand;
            break;
        }
    }
    const i64 z = pow_mod(detail::find_primitive_root(ell), (ell - 1) / e, ell);

    // Splitting of F_ell^r into common eigenspaces of the class-sum
    // matrices A_i[j][k] = #{x in C_i : x^{-1} g_k in C_j}.
    std::vector<detail::ModMatrix> spaces{detail::ModMatrix(r, detail::ModRow(r, 0))};
    for (std::size_t j = 0; j < r; ++j) spaces[0][j][j] = 1;

    for (std::size_t i = 0; i < r; ++i) {
        bool all_split = true;
        for (const auto& w : spaces) all_split &= w.size() == 1;
        if (all_split) break;

        detail::ModMatrix a(r, detail::ModRow(r, 0));
        for (int x : group.classes()[i]) {
            int xinv = group.inverse(x);
            for (std::size_t k = 0; k < r; ++k) {
                std::size_t j = static_cast<std::size_t>(group.class_of(group.mul(xinv, group.representative(k))));
                a[j][k] += 1;
            }
        }

        std::vector<detail::ModMatrix> next;
        for (auto& w : spaces) {
            if (w.size() == 1) {
                next.push_back(std::move(w));
                continue;
            }
            auto pivots = detail::rref_mod(w, ell);
            const std::size_t d = w.size();
            // Restriction C of A to the subspace, in basis coordinates.
            detail::ModMatrix c(d, detail::ModRow(d, 0));
            for (std::size_t t = 0; t < d; ++t) {
                detail::ModRow u(r, 0);
                for (std::size_t jj = 0; jj < r; ++jj) {
                    i64 acc = 0;
                    for (std::size_t kk = 0; kk < r; ++kk)
                        acc = mod_reduce(acc + mul_mod(mod_reduce(a[jj][kk], ell), w[t][kk], ell), ell);
                    u[jj] = acc;
                }
                for (std::size_t s = 0; s < d; ++s) {
                    i64 coeff = u[pivots[s]];
                    c[s][t] = coeff;
                    if (coeff == 0) continue;
                    for (std::size_t jj = 0; jj < r; ++jj)
                        u[jj] = mod_reduce(u[jj] - mul_mod(coeff, w[s][jj], ell), ell);
                }
                for (i64 leftover : u) {
                    if (leftover != 0) throw std::logic_error("character_table: subspace not invariant");
                }
            }

            std::vector<i64> poly = detail::char_poly_mod(c, ell);
            std::size_t found = 0;
            for (i64 lambda = 0; lambda < ell && found < d; ++lambda) {
                if (detail::eval_poly_mod(poly, lambda, ell) != 0) continue;
                detail::ModMatrix shifted(d, detail::ModRow(d));
                for (std::size_t ii = 0; ii < d; ++ii) {
                    for (std::size_t jj = 0; jj < d; ++jj)
                        shifted[ii][jj] = mod_reduce(c[ii][jj] - (ii == jj ? lambda : 0), ell);
                }
                auto spivots = detail::rref_mod(shifted, ell);
                // Nullspace basis in subspace coordinates, mapped back to F_ell^r.
                detail::ModMatrix eigen;
                std::vector<char> is_pivot(d, 0);
                for (std::size_t pc : spivots) is_pivot[pc] = 1;
                for (std::size_t free_col = 0; free_col < d; ++free_col) {
                    if (is_pivot[free_col]) continue;
                    detail::ModRow coords(d, 0);
                    coords[free_col] = 1;
                    for (std::size_t row = 0; row < spivots.size(); ++row)
                        coords[spivots[row]] = mod_reduce(-shifted[row][free_col], ell);
                    detail::ModRow vec(r, 0);
                    for (std::size_t s = 0; s < d; ++s) {
                        if (coords[s] == 0) continue;
                        for (std::size_t jj = 0; jj < r; ++jj)
                            vec[jj] = mod_reduce(vec[jj] + mul_mod(coords[s], w[s][jj], ell), ell);
                    }
                    eigen.push_back(std::move(vec));
                    ++found;
                }
                if (!eigen.empty()) next.push_back(std::move(eigen));
            }
            if (found != d) throw std::logic_error("character_table: eigenspace dimensions do not add up");
        }
        spaces = std::move(next);
    }

    for (const auto& w : spaces) {
        if (w.size() != 1) throw std::logic_error("character_table: class matrices failed to separate characters");
    }

    // Power-class table: class of rep(k)^j for j in [0, e).
    std::vector<std::vector<std::size_t>> pcls(r, std::vector<std::size_t>(static_cast<std::size_t>(e)));
    for (std::size_t k = 0; k < r; ++k) {
        for (i64 j = 0; j < e; ++j) pcls[k][static_cast<std::size_t>(j)] = static_cast<std::size_t>(group.class_of_power(k, j));
    }

    std::vector<i64> zpow(static_cast<std::size_t>(e));
    for (i64 t = 0; t < e; ++t) zpow[static_cast<std::size_t>(t)] = pow_mod(z, t, ell);
    const i64 e_inv = inv_mod(mod_reduce(e, ell), ell);

    for (const auto& w : spaces) {
        // Normalize so that the identity-class coordinate is 1; the vector
        // coordinates are then omega_k = h_k chi(g_k) / chi(1) mod ell.
        detail::ModRow omega = w[0];
        if (omega[0] == 0) throw std::logic_error("character_table: degenerate eigenvector");
        i64 scale = inv_mod(omega[0], ell);
        for (i64& x : omega) x = mul_mod(x, scale, ell);

        i64 denom = 0;
        for (std::size_t k = 0; k < r; ++k) {
            std::size_t kinv = static_cast<std::size_t>(group.class_of(group.inverse(group.representative(k))));
            denom = mod_reduce(denom + mul_mod(mul_mod(omega[k], omega[kinv], ell),
                                               inv_mod(mod_reduce(group.class_size(k), ell), ell), ell),
                               ell);
        }
        i64 dsq = mul_mod(mod_reduce(n, ell), inv_mod(denom, ell), ell);
        i64 degree = 0;
        for (i64 dcand = 1; dcand * dcand <= n; ++dcand) {
            if (mod_reduce(dcand * dcand, ell) == dsq) {
                degree = dcand;
                break;
            }
        }
        if (degree == 0) throw std::logic_error("character_table: degree lift failed");

        detail::ModRow chi_mod(r);
        for (std::size_t k = 0; k < r; ++k)
            chi_mod[k] = mul_mod(mul_mod(degree % ell, omega[k], ell),
                                 inv_mod(mod_reduce(group.class_size(k), ell), ell), ell);

        CharacterRow row;
        row.degree = degree;
        for (std::size_t k = 0; k < r; ++k) {
            std::vector<Rational> coeffs(static_cast<std::size_t>(e), Rational(0));
            for (i64 u = 0; u < e; ++u) {
                i64 acc = 0;
                for (i64 j = 0; j < e; ++j) {
                    i64 zexp = mod_reduce(-u * j, e);
                    acc = mod_reduce(acc + mul_mod(chi_mod[pcls[k][static_cast<std::size_t>(j)]],
                                                   zpow[static_cast<std::size_t>(zexp)], ell),
                                     ell);
                }
                i64 mult = mul_mod(e_inv, acc, ell);
                if (mult > degree) throw std::logic_error("character_table: multiplicity lift failed");
                coeffs[static_cast<std::size_t>(u)] = Rational(mult);
            }
            row.values.emplace_back(e, std::move(coeffs));
        }
        out.characters.push_back(std::move(row));
    }

    std::sort(out.characters.begin(), out.characters.end(), [](const CharacterRow& a, const CharacterRow& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.values < b.values;
    });

    i64 degree_square_sum = 0;
    for (const auto& row : out.characters) degree_square_sum += row.degree * row.degree;
    if (degree_square_sum != n) throw std::logic_error("character_table: degree check failed");
    return out;
}

/// First orthogonality: sum_k h_k chi_a(g_k) conj(chi_b(g_k)) = delta_ab |G|.
inline bool verify_row_orthogonality(const CharacterTable& table) {
    const i64 n = static_cast<i64>(table.group.order());
    const i64 e = table.exponent;
    for (std::size_t a = 0; a < table.characters.size(); ++a) {
        for (std::size_t b = 0; b < table.characters.size(); ++b) {
            CyclotomicNumber sum(e);
            for (std::size_t k = 0; k < table.classes.size(); ++k) {
                CyclotomicNumber term = table.characters[a].values[k] * table.characters[b].values[k].conjugate();
                sum += Rational(table.classes[k].size) * term;
            }
            if (!(sum == CyclotomicNumber::from_rational(e, a == b ? Rational(n) : Rational(0)))) return false;
        }
    }
    return true;
}

/// Second orthogonality: sum_chi chi(g_k) conj(chi(g_l)) = delta_kl |G| / h_k.
inline bool verify_column_orthogonality(const CharacterTable& table) {
    const i64 n = static_cast<i64>(table.group.order());
    const i64 e = table.exponent;
    for (std::size_t k = 0; k < table.classes.size(); ++k) {
        for (std::size_t l = 0; l < table.classes.size(); ++l) {
            CyclotomicNumber sum(e);
            for (const auto& row : table.characters) sum += row.values[k] * row.values[l].conjugate();
            Rational expected = k == l ? Rational(n) / Rational(table.classes[k].size) : Rational(0);
            if (!(sum == CyclotomicNumber::from_rational(e, expected))) return false;
        }
    }
    return true;
}

}  // namespace hasse
