#pragma once

// Hilbert symbols (a,b)_v over Q and the quaternion Brauer classes they
// cut out. The closed-form symbol is checked elsewhere against the
// brute-force local solubility oracle below, which decides solubility of
// z^2 = a x^2 + b y^2 by searching primitive solutions mod p^k together
// with a Hensel liftability certificate.

#include "hasse/arith.hpp"
#include "hasse/brauer.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hasse {

namespace detail {

inline int parity(i64 x) { return static_cast<int>(mod_reduce(x, 2)); }

// (u-1)/2 mod 2 for odd u.
inline int eps4(i64 u) { return parity((u - 1) / 2); }

// (u^2-1)/8 mod 2 for odd u.
inline int omega8(i64 u) { return parity((u * u - 1) / 8); }

}  // namespace detail

/// Closed-form Hilbert symbol (a,b)_v in {+1,-1}: +1 iff z^2 = a x^2 + b y^2
/// has a nontrivial solution over Q_v. The place must be a place of Q
/// (finite or the real place).
inline int hilbert_symbol(i64 a, i64 b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v.kind == Place::Kind::complex) throw std::invalid_argument("hilbert_symbol: Q has no complex place");
    if (v.kind == Place::Kind::real) return (a < 0 && b < 0) ? -1 : 1;

    i64 p = v.p;
    if (!is_prime(p)) throw std::invalid_argument("hilbert_symbol: place is not a prime");
    int alpha = valuation(a, p);
    int beta = valuation(b, p);
    i64 u = a, w = b;
    for (int i = 0; i < alpha; ++i) u /= p;
    for (int i = 0; i < beta; ++i) w /= p;

    if (p != 2) {
        int sign = 1;
        if (alpha % 2 != 0 && beta % 2 != 0 && (p - 1) / 2 % 2 != 0) sign = -sign;
        if (beta % 2 != 0 && legendre_symbol(u, p) == -1) sign = -sign;
        if (alpha % 2 != 0 && legendre_symbol(w, p) == -1) sign = -sign;
        return sign;
    }
    int exponent = detail::eps4(u) * detail::eps4(w) + alpha * detail::omega8(w) + beta * detail::omega8(u);
    return exponent % 2 == 0 ? 1 : -1;
}

/// Independent solubility oracle. Searches primitive solutions of
/// z^2 = a x^2 + b y^2 mod p^k for k = 1, 2, ..., precision:
///   - a primitive solution whose gradient valuation d satisfies 2d < k
///     lifts to Z_p (Hensel), certifying solubility;
///   - absence of any primitive solution mod p^k certifies insolubility.
/// The default precision cap is 4 + val_p(4ab), which the escalation never
/// exceeds in practice. At the real place the oracle is the sign check.
inline int local_solubility_oracle(i64 a, i64 b, const Place& v, std::optional<int> precision = std::nullopt) {
    if (a == 0 || b == 0) throw std::invalid_argument("local_solubility_oracle: zero argument");
    if (v.kind == Place::Kind::complex) throw std::invalid_argument("local_solubility_oracle: Q has no complex place");
    if (v.kind == Place::Kind::real) return (a < 0 && b < 0) ? -1 : 1;

    const i64 p = v.p;
    if (!is_prime(p)) throw std::invalid_argument("local_solubility_oracle: place is not a prime");
    const int cap = precision.value_or(4 + valuation(4 * a * b, p));
    constexpr i64 kTableLimit = i64(1) << 22;

    for (int k = 1; k <= cap; ++k) {
        i64 pk = 1;
        for (int i = 0; i < k; ++i) {
            pk *= p;
            if (pk > kTableLimit) throw std::runtime_error("local_solubility_oracle: residue table exceeds size limit");
        }
        const i64 am = mod_reduce(a, pk);
        const i64 bm = mod_reduce(b, pk);

        auto val_in = [&](i64 x) {  // valuation of a residue; >= k is reported as k
            if (x == 0) return k;
            int vv = 0;
            while (x % p == 0) { x /= p; ++vv; }
            return vv;
        };

        // Witness tables: for each residue t, a z with z^2 = t (resp. a y
        // with b y^2 = t) of minimal valuation. -1 marks "not represented".
        std::vector<i64> sq_witness(static_cast<std::size_t>(pk), -1);
        std::vector<i64> bsq_witness(static_cast<std::size_t>(pk), -1);
        for (i64 z = 0; z < pk; ++z) {
            i64 t = mul_mod(z, z, pk);
            if (sq_witness[static_cast<std::size_t>(t)] == -1 ||
                val_in(z) < val_in(sq_witness[static_cast<std::size_t>(t)]))
                sq_witness[static_cast<std::size_t>(t)] = z;
            i64 tb = mul_mod(bm, t, pk);
            if (bsq_witness[static_cast<std::size_t>(tb)] == -1 ||
                val_in(z) < val_in(bsq_witness[static_cast<std::size_t>(tb)]))
                bsq_witness[static_cast<std::size_t>(tb)] = z;
        }

        bool found_primitive = false;
        auto certify = [&](i64 x, i64 y, i64 z) {
            found_primitive = true;
            int d = std::min({val_in(mod_reduce(2 * mul_mod(am, x, pk), pk)),
                              val_in(mod_reduce(2 * mul_mod(bm, y, pk), pk)),
                              val_in(mod_reduce(2 * z, pk))});
            return 2 * d < k;
        };

        // Every primitive triple has a unit coordinate; scaling by units
        // lets us pin that coordinate to 1 and sweep the other two.
        for (i64 y = 0; y < pk; ++y) {  // x = 1
            i64 t = mod_reduce(am + mul_mod(bm, mul_mod(y, y, pk), pk), pk);
            i64 z = sq_witness[static_cast<std::size_t>(t)];
            if (z >= 0 && certify(1, y, z)) return 1;
        }
        for (i64 x = 0; x < pk; ++x) {  // y = 1
            i64 t = mod_reduce(mul_mod(am, mul_mod(x, x, pk), pk) + bm, pk);
            i64 z = sq_witness[static_cast<std::size_t>(t)];
            if (z >= 0 && certify(x, 1, z)) return 1;
        }
        for (i64 x = 0; x < pk; ++x) {  // z = 1
            i64 t = mod_reduce(1 - mul_mod(am, mul_mod(x, x, pk), pk), pk);
            i64 y = bsq_witness[static_cast<std::size_t>(t)];
            if (y >= 0 && certify(x, y, 1)) return 1;
        }
        if (!found_primitive) return -1;
    }
    throw std::runtime_error("local_solubility_oracle: precision cap exhausted without a certificate");
}

/// The Brauer class of the quaternion algebra (a,b) over Q: invariant 1/2
/// exactly at the places with symbol -1. The support scan covers the real
/// place, 2, and the primes dividing a or b; the construction re-checks
/// reciprocity through the exact-sequence validator.
inline CsaClass quaternion_class(i64 a, i64 b) {
    if (a == 0 || b == 0) throw std::invalid_argument("quaternion_class: zero argument");
    std::vector<i64> primes{2};
    for (auto [p, e] : factor(a)) {
        if (p != 2) primes.push_back(p);
    }
    for (auto [p, e] : factor(b)) {
        if (p != 2) primes.push_back(p);
    }
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    std::map<Place, CyclicRational> inv;
    if (hilbert_symbol(a, b, Place::real()) == -1) inv.emplace(Place::real(), CyclicRational::half());
    for (i64 p : primes) {
        if (hilbert_symbol(a, b, Place::finite(p)) == -1) inv.emplace(Place::finite(p), CyclicRational::half());
    }
    return CsaClass::make(AbelianField::rationals(), std::move(inv));
}

}  // namespace hasse
