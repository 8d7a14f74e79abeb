#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hasse {

using Integer = boost::multiprecision::cpp_int;

/// Element of Q/Z, stored as the reduced fraction a/b with 0 <= a < b and
/// gcd(a, b) = 1 (zero is 0/1). This is the value group of every local
/// invariant in the library, so the representation is canonical: equality
/// is structural and the ordering below is the numeric order on [0, 1).
class CyclicRational {
public:
    CyclicRational() : num_(0), den_(1) {}

    CyclicRational(Integer numerator, Integer denominator) {
        if (denominator == 0) throw std::invalid_argument("CyclicRational: zero denominator");
        if (denominator < 0) {
            denominator = -denominator;
            numerator = -numerator;
        }
        numerator %= denominator;
        if (numerator < 0) numerator += denominator;
        Integer g = boost::multiprecision::gcd(numerator, denominator);
        num_ = numerator / g;
        den_ = denominator / g;
        if (num_ == 0) den_ = 1;
    }

    static CyclicRational half() { return CyclicRational(1, 2); }

    /// Accepts "a/b" or a bare integer (which is 0 in Q/Z).
    static CyclicRational parse(std::string_view text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string_view::npos) {
                return CyclicRational(Integer(std::string(text)), 1);
            }
            Integer num{std::string(text.substr(0, slash))};
            Integer den{std::string(text.substr(slash + 1))};
            return CyclicRational(num, den);
        } catch (const std::runtime_error&) {
            throw std::invalid_argument("CyclicRational: cannot parse '" + std::string(text) + "'");
        }
    }

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    /// Additive order: smallest N >= 1 with N*x = 0; equals the reduced denominator.
    const Integer& order() const { return den_; }

    std::string str() const {
        if (num_ == 0) return "0";
        return num_.str() + "/" + den_.str();
    }

    friend CyclicRational operator+(const CyclicRational& a, const CyclicRational& b) {
        return CyclicRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    friend CyclicRational operator-(const CyclicRational& a, const CyclicRational& b) {
        return CyclicRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }

    CyclicRational operator-() const { return CyclicRational(-num_, den_); }

    friend CyclicRational operator*(const Integer& k, const CyclicRational& x) {
        return CyclicRational(k * x.num_, x.den_);
    }

    CyclicRational& operator+=(const CyclicRational& o) { return *this = *this + o; }

    bool operator==(const CyclicRational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::strong_ordering operator<=>(const CyclicRational& o) const {
        Integer lhs = num_ * o.den_, rhs = o.num_ * den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Integer num_, den_;
};

}  // namespace hasse
