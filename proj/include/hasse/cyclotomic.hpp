#pragma once

// Exact arithmetic in Q(zeta_e): numbers are stored by their coefficient
// vector over the power basis 1, zeta, ..., zeta^{phi(e)-1}, reduced modulo
// the e-th cyclotomic polynomial. Equality is therefore decidable and
// structural.

#include "hasse/arith.hpp"
#include "hasse/cyclic_rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

using Rational = boost::multiprecision::cpp_rational;

/// Coefficients of the e-th cyclotomic polynomial, ascending, monic.
/// Results are memoized per thread; reductions call this on every product.
inline const std::vector<Integer>& cyclotomic_polynomial(i64 e) {
    if (e < 1) throw std::invalid_argument("cyclotomic_polynomial: modulus must be positive");
    thread_local std::map<i64, std::vector<Integer>> cache;
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    // x^e - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<Integer> poly(static_cast<std::size_t>(e) + 1, Integer(0));
    poly.front() = -1;
    poly.back() = 1;
    for (i64 d : divisors(e)) {
        if (d == e) continue;
        const std::vector<Integer>& divisor = cyclotomic_polynomial(d);
        std::vector<Integer> quotient(poly.size() - divisor.size() + 1, Integer(0));
        for (std::size_t i = quotient.size(); i-- > 0;) {
            Integer c = poly[i + divisor.size() - 1];
            quotient[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < divisor.size(); ++j) poly[i + j] -= c * divisor[j];
        }
        for (const Integer& c : poly) {
            if (c != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
        }
        poly = std::move(quotient);
    }
    return cache.emplace(e, std::move(poly)).first->second;
}

class CyclotomicNumber {
public:
    explicit CyclotomicNumber(i64 modulus = 1) : modulus_(modulus) {
        if (modulus < 1) throw std::invalid_argument("CyclotomicNumber: modulus must be positive");
        coeffs_.assign(static_cast<std::size_t>(euler_phi(modulus)), Rational(0));
    }

    /// Reduces an arbitrary coefficient vector (in powers of zeta_e) modulo
    /// the cyclotomic polynomial.
    CyclotomicNumber(i64 modulus, std::vector<Rational> raw) : CyclotomicNumber(modulus) {
        const std::vector<Integer>& phi = cyclotomic_polynomial(modulus);
        std::size_t deg = phi.size() - 1;
        for (std::size_t i = raw.size(); i-- > deg;) {
            Rational c = raw[i];
            if (c == 0) continue;
            raw[i] = 0;
            for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * Rational(phi[j]);
        }
        for (std::size_t i = 0; i < coeffs_.size() && i < raw.size(); ++i) coeffs_[i] = raw[i];
    }

    static CyclotomicNumber from_rational(i64 modulus, Rational value) {
        CyclotomicNumber x(modulus);
        if (!x.coeffs_.empty()) x.coeffs_[0] = std::move(value);
        return x;
    }

    /// zeta_e^k.
    static CyclotomicNumber root_of_unity(i64 modulus, i64 k) {
        std::vector<Rational> raw(static_cast<std::size_t>(modulus), Rational(0));
        raw[static_cast<std::size_t>(mod_reduce(k, modulus))] = 1;
        return CyclotomicNumber(modulus, std::move(raw));
    }

    i64 modulus() const { return modulus_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const {
        for (const Rational& c : coeffs_) {
            if (c != 0) return false;
        }
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != 0) return false;
        }
        return true;
    }

    Rational rational_value() const {
        if (!is_rational()) throw std::domain_error("CyclotomicNumber: value is not rational");
        return coeffs_.empty() ? Rational(0) : coeffs_[0];
    }

    /// Galois twist zeta |-> zeta^b for b coprime to the modulus.
    CyclotomicNumber galois(i64 b) const {
        b = mod_reduce(b, modulus_);
        if (std::gcd(b, modulus_) != 1 && modulus_ > 1)
            throw std::invalid_argument("CyclotomicNumber: galois exponent not a unit");
        std::vector<Rational> raw(static_cast<std::size_t>(modulus_), Rational(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[static_cast<std::size_t>(mod_reduce(b * static_cast<i64>(i), modulus_))] += coeffs_[i];
        return CyclotomicNumber(modulus_, std::move(raw));
    }

    CyclotomicNumber conjugate() const { return galois(modulus_ - 1); }

    /// Image in Q(zeta_E) for modulus | E.
    CyclotomicNumber promoted(i64 bigger) const {
        if (bigger % modulus_ != 0) throw std::invalid_argument("CyclotomicNumber: cannot promote to non-multiple modulus");
        std::vector<Rational> raw(static_cast<std::size_t>(bigger), Rational(0));
        i64 step = bigger / modulus_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            raw[static_cast<std::size_t>(step * static_cast<i64>(i))] += coeffs_[i];
        return CyclotomicNumber(bigger, std::move(raw));
    }

    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        a.require_same_modulus(b);
        CyclotomicNumber out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
        return out;
    }

    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        a.require_same_modulus(b);
        CyclotomicNumber out = a;
        for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
        return out;
    }

    CyclotomicNumber operator-() const {
        CyclotomicNumber out = *this;
        for (Rational& c : out.coeffs_) c = -c;
        return out;
    }

    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        a.require_same_modulus(b);
        std::vector<Rational> raw(2 * a.coeffs_.size(), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) raw[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return CyclotomicNumber(a.modulus_, std::move(raw));
    }

    friend CyclotomicNumber operator*(const Rational& s, const CyclotomicNumber& a) {
        CyclotomicNumber out = a;
        for (Rational& c : out.coeffs_) c *= s;
        return out;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }

    bool operator==(const CyclotomicNumber& o) const {
        return modulus_ == o.modulus_ && coeffs_ == o.coeffs_;
    }

    /// Structural order (modulus, then coefficient vector); used for
    /// deterministic sorting, not a numeric comparison.
    std::strong_ordering operator<=>(const CyclotomicNumber& o) const {
        if (modulus_ != o.modulus_) return modulus_ <=> o.modulus_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] != o.coeffs_[i]) return coeffs_[i] < o.coeffs_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

    /// Rendered as a polynomial in z = zeta_modulus, e.g. "2", "-1/2 + z^2".
    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Rational& c = coeffs_[i];
            if (c == 0) continue;
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
                first = false;
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            bool unit_coeff = (mag == 1) && i > 0;
            if (!unit_coeff) os << mag;
            if (i == 1) os << (unit_coeff ? "z" : "*z");
            if (i > 1) os << (unit_coeff ? "z^" : "*z^") << i;
        }
        if (first) os << "0";
        return os.str();
    }

private:
    void require_same_modulus(const CyclotomicNumber& o) const {
        if (modulus_ != o.modulus_) throw std::invalid_argument("CyclotomicNumber: modulus mismatch");
    }

    i64 modulus_;
    std::vector<Rational> coeffs_;  // size phi(modulus)
};

}  // namespace hasse
