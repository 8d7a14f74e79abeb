#pragma once

// Brauer classes over an abelian field, represented by their finitely
// supported local invariant vectors. Validity is the exact-sequence
// contract: archimedean entries lie in (1/2)Z/Z, complex entries vanish,
// and the invariants sum to zero.

#include "hasse/abelian_field.hpp"
#include "hasse/cyclic_rational.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace hasse {

struct LocalSplittingCertificate {
    Place place;
    i64 local_degree = 1;        // [L_w : K_v] for any w over v
    CyclicRational extended;     // local_degree * inv_v; zero iff split at v
};

struct SplittingResult {
    bool splits = true;
    std::vector<LocalSplittingCertificate> certificates;
};

class CsaClass {
public:
    /// Validates a raw invariant map against the exact-sequence contract
    /// and drops zero entries. Throws std::invalid_argument on
    /// "archimedean overflow", "complex place nonzero", "reciprocity
    /// failure", or an invariant attached to a place the field lacks.
    static CsaClass make(AbelianField field, std::map<Place, CyclicRational> invariants) {
        for (auto it = invariants.begin(); it != invariants.end();) {
            if (it->second.is_zero()) {
                it = invariants.erase(it);
            } else {
                ++it;
            }
        }
        CyclicRational sum;
        for (const auto& [place, inv] : invariants) {
            if (!field.is_valid_place(place))
                throw std::invalid_argument("CsaClass: unknown place " + place.str() + " for this field");
            if (place.kind == Place::Kind::complex)
                throw std::invalid_argument("CsaClass: complex place nonzero at " + place.str());
            if (place.kind == Place::Kind::real && inv.denominator() > 2)
                throw std::invalid_argument("CsaClass: archimedean overflow at " + place.str());
            sum += inv;
        }
        if (!sum.is_zero())
            throw std::invalid_argument("CsaClass: reciprocity failure (invariants sum to " + sum.str() + ")");
        return CsaClass(std::move(field), std::move(invariants));
    }

    static CsaClass trivial(AbelianField field) { return CsaClass(std::move(field), {}); }

    const AbelianField& field() const { return field_; }
    const std::map<Place, CyclicRational>& invariants() const { return inv_; }
    bool is_trivial() const { return inv_.empty(); }

    CyclicRational invariant_at(const Place& v) const {
        auto it = inv_.find(v);
        return it == inv_.end() ? CyclicRational() : it->second;
    }

    /// Index = exponent (lcm of the local orders); over number fields the
    /// two coincide, which is the fact this module leans on.
    Integer index() const {
        Integer idx = 1;
        for (const auto& [place, inv] : inv_) idx = boost::multiprecision::lcm(idx, inv.order());
        return idx;
    }

    friend CsaClass tensor(const CsaClass& a, const CsaClass& b) {
        if (!(a.field_ == b.field_)) throw std::invalid_argument("tensor: base field mismatch");
        std::map<Place, CyclicRational> sum = a.inv_;
        for (const auto& [place, inv] : b.inv_) {
            auto [it, inserted] = sum.emplace(place, inv);
            if (!inserted) it->second += inv;
        }
        return make(a.field_, std::move(sum));
    }

    friend CsaClass opposite(const CsaClass& a) {
        std::map<Place, CyclicRational> neg;
        for (const auto& [place, inv] : a.inv_) neg.emplace(place, -inv);
        return CsaClass(a.field_, std::move(neg));
    }

    /// Tests whether L splits the class: at every place w of L over v the
    /// local degree [L_w : Q_v] must kill inv_v. Restricted to base field Q.
    SplittingResult splits_over(const AbelianField& L) const {
        if (!field_.is_rationals())
            throw std::invalid_argument("splits_over: only base field Q is supported");
        if (!L.contains(field_))
            throw std::invalid_argument("splits_over: field does not contain the base field");
        SplittingResult result;
        for (const auto& [place, inv] : inv_) {
            LocalSplittingCertificate cert;
            cert.place = place;
            cert.local_degree = place.is_finite() ? L.local_degree(place.p) : L.local_degree_at_infinity();
            cert.extended = Integer(cert.local_degree) * inv;
            if (!cert.extended.is_zero()) result.splits = false;
            result.certificates.push_back(std::move(cert));
        }
        return result;
    }

    bool operator==(const CsaClass& o) const { return field_ == o.field_ && inv_ == o.inv_; }

private:
    CsaClass(AbelianField field, std::map<Place, CyclicRational> invariants)
        : field_(std::move(field)), inv_(std::move(invariants)) {}

    AbelianField field_;
    std::map<Place, CyclicRational> inv_;  // nonzero entries only
};

}  // namespace hasse
