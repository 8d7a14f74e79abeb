#pragma once

// Elementary number theory on machine integers. Everything here runs at
// desk scale (conductors <= 10^6, symbol arguments <= 10^12), so trial
// division is used throughout.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hasse {

using i64 = std::int64_t;

// x mod m normalized into [0, m); m > 0.
inline i64 mod_reduce(i64 x, i64 m) {
    i64 r = x % m;
    return r < 0 ? r + m : r;
}

inline i64 mul_mod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 pow_mod(i64 base, i64 exp, i64 m) {
    base = mod_reduce(base, m);
    i64 r = 1 % m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

inline i64 inv_mod(i64 a, i64 m) {
    a = mod_reduce(a, m);
    i64 g = m, x = 0, x1 = 1, a1 = a;
    while (a1 != 0) {
        i64 q = g / a1;
        x -= q * x1;
        std::swap(x, x1);
        g -= q * a1;
        std::swap(g, a1);
    }
    if (g != 1) throw std::invalid_argument("inv_mod: arguments are not coprime");
    return mod_reduce(x, m);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (i64 d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

// Prime factorization of |n| by trial division; n must be nonzero and
// |n| <= 10^12 so the residual cofactor is certified prime.
inline std::vector<std::pair<i64, int>> factor(i64 n) {
    if (n == 0) throw std::invalid_argument("factor: zero argument");
    if (n < 0) n = -n;
    if (n > 1'000'000'000'000LL) throw std::invalid_argument("factor: argument exceeds supported size");
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        int e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

inline int valuation(i64 n, i64 p) {
    if (n == 0) throw std::invalid_argument("valuation: zero argument");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// Largest square-free divisor of |n|, with the sign of n.
inline i64 squarefree_kernel(i64 n) {
    i64 sign = n < 0 ? -1 : 1;
    i64 k = 1;
    for (auto [p, e] : factor(n)) {
        if (e % 2 != 0) k *= p;
    }
    return sign * k;
}

inline bool is_squarefree(i64 n) {
    if (n == 0) return false;
    for (auto [p, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

inline std::vector<i64> primes_upto(i64 n) {
    std::vector<i64> out;
    for (i64 p = 2; p <= n; ++p) {
        if (is_prime(p)) out.push_back(p);
    }
    return out;
}

inline i64 euler_phi(i64 n) {
    i64 phi = 1;
    for (auto [p, e] : factor(n)) {
        phi *= p - 1;
        for (int i = 1; i < e; ++i) phi *= p;
    }
    return phi;
}

inline std::vector<i64> divisors(i64 n) {
    std::vector<i64> out{1};
    for (auto [p, e] : factor(n)) {
        std::size_t sz = out.size();
        i64 q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Legendre symbol (a|p) for an odd prime p, via Euler's criterion.
inline int legendre_symbol(i64 a, i64 p) {
    a = mod_reduce(a, p);
    if (a == 0) return 0;
    i64 r = pow_mod(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

// Kronecker symbol (a|n), the full extension of the Jacobi symbol.
inline int kronecker_symbol(i64 a, i64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    if (n % 2 == 0) {
        if (a % 2 == 0) return 0;
        int v = valuation(n, 2);
        n >>= v;
        i64 am8 = mod_reduce(a, 8);
        if (v % 2 != 0 && (am8 == 3 || am8 == 5)) result = -result;
    }
    for (auto [p, e] : factor(n == 0 ? 1 : n)) {
        if (n == 1) break;
        int s = legendre_symbol(a, p);
        if (s == 0) return 0;
        if (e % 2 != 0 && s == -1) result = -result;
    }
    return result;
}

// x = r1 mod m1, x = r2 mod m2 for coprime moduli; result in [0, m1*m2).
inline i64 crt(i64 r1, i64 m1, i64 r2, i64 m2) {
    if (m1 == 1) return mod_reduce(r2, m2);
    if (m2 == 1) return mod_reduce(r1, m1);
    i64 t = mul_mod(mod_reduce(r2 - r1, m2), inv_mod(m1, m2), m2);
    return mod_reduce(mod_reduce(r1, m1 * m2) + m1 * t, m1 * m2);
}

}  // namespace hasse
