#pragma once

// Abelian number fields K/Q presented by a conductor m and a subgroup
// H <= (Z/m)^x; K is the fixed field of H inside Q(zeta_m). All place and
// Galois computations reduce to finite arithmetic in (Z/m)^x.

#include "hasse/arith.hpp"

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hasse {

/// A place of an abelian field. Finite places carry the residue
/// characteristic and the minimal representative of their coset of the
/// decomposition subgroup; archimedean places carry an index into the
/// canonical ordering of real (resp. complex) places.
struct Place {
    enum class Kind { finite, real, complex };

    Kind kind = Kind::finite;
    i64 p = 0;      // residue characteristic, finite places only
    i64 label = 0;  // finite: minimal coset representative; archimedean: index

    static Place finite(i64 p, i64 label = 0) { return Place{Kind::finite, p, label}; }
    static Place real(i64 index = 0) { return Place{Kind::real, 0, index}; }
    static Place complex(i64 index = 0) { return Place{Kind::complex, 0, index}; }

    bool is_finite() const { return kind == Kind::finite; }
    bool is_archimedean() const { return kind != Kind::finite; }

    std::string str() const {
        switch (kind) {
            case Kind::finite: return std::to_string(p) + ":" + std::to_string(label);
            case Kind::real: return "inf:real:" + std::to_string(label);
            case Kind::complex: return "inf:complex:" + std::to_string(label);
        }
        throw std::logic_error("Place: bad kind");
    }

    static Place parse(std::string_view text) {
        auto field = [&](std::string_view s, std::string_view prefix) -> i64 {
            try {
                return std::stoll(std::string(s));
            } catch (...) {
                throw std::invalid_argument("Place: cannot parse '" + std::string(prefix) + "'");
            }
        };
        if (text.starts_with("inf:real:")) return real(field(text.substr(9), text));
        if (text.starts_with("inf:complex:")) return complex(field(text.substr(12), text));
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("Place: cannot parse '" + std::string(text) + "'");
        return finite(field(text.substr(0, colon), text), field(text.substr(colon + 1), text));
    }

    auto operator<=>(const Place&) const = default;
};

/// sigma in Gal(K/Q) = (Z/m)^x / H, named by any unit residue in its coset.
struct GaloisElement {
    i64 residue = 1;
};

struct PrimeDecomposition {
    i64 e = 1;  // ramification index
    i64 f = 1;  // inertia degree
    i64 g = 1;  // number of places over p
    std::vector<Place> places;             // sorted by label
    std::vector<std::vector<i64>> cosets;  // cosets of D_p*H, parallel to places
};

class AbelianField {
public:
    static constexpr i64 kMaxConductor = 1'000'000;

    /// Builds the field from a conductor and subgroup generators, computing
    /// the subgroup closure and canonicalizing to the true (minimal)
    /// conductor. Generators must be units mod m.
    static AbelianField make(i64 conductor, std::span<const i64> generators) {
        if (conductor < 1) throw std::invalid_argument("AbelianField: conductor must be positive");
        if (conductor > kMaxConductor) throw std::invalid_argument("AbelianField: conductor exceeds configured cap");
        std::vector<i64> seeds;
        for (i64 g : generators) {
            i64 r = mod_reduce(g, conductor);
            if (std::gcd(r, conductor) != 1) throw std::invalid_argument("AbelianField: generator not coprime to conductor");
            seeds.push_back(r);
        }
        std::vector<i64> subgroup = closure(conductor, seeds);
        std::vector<i64> units = unit_residues(conductor);

        // True conductor: the smallest m' | m whose kernel (Z/m)^x -> (Z/m')^x
        // is contained in H.
        for (i64 mp : divisors(conductor)) {
            bool kernel_inside = true;
            for (i64 x : units) {
                if (mod_reduce(x, mp) == mod_reduce(1, mp) &&
                    !std::binary_search(subgroup.begin(), subgroup.end(), x)) {
                    kernel_inside = false;
                    break;
                }
            }
            if (!kernel_inside) continue;
            std::vector<i64> projected;
            for (i64 h : subgroup) projected.push_back(mod_reduce(h, mp));
            std::sort(projected.begin(), projected.end());
            projected.erase(std::unique(projected.begin(), projected.end()), projected.end());
            return AbelianField(mp, std::move(projected));
        }
        throw std::logic_error("AbelianField: canonicalization failed");  // unreachable: m' = m always works
    }

    static AbelianField make(i64 conductor, std::initializer_list<i64> generators) {
        return make(conductor, std::span<const i64>(generators.begin(), generators.size()));
    }

    static AbelianField rationals() { return make(1, {}); }

    /// Q(zeta_m).
    static AbelianField cyclotomic(i64 m) { return make(m, {}); }

    /// Q(sqrt(d)) for square-free d not in {0, 1}: conductor |D| for the
    /// fundamental discriminant D, subgroup the kernel of the Kronecker
    /// character (D|.).
    static AbelianField quadratic(i64 d) {
        if (d == 0 || d == 1) throw std::invalid_argument("quadratic: d must not be 0 or 1");
        if (!is_squarefree(d)) throw std::invalid_argument("quadratic: d must be square-free");
        i64 disc = mod_reduce(d, 4) == 1 ? d : 4 * d;
        i64 m = disc < 0 ? -disc : disc;
        std::vector<i64> kernel;
        for (i64 x : unit_residues(m)) {
            if (kronecker_symbol(disc, x) == 1) kernel.push_back(x);
        }
        AbelianField K = make(m, std::span<const i64>(kernel.data(), kernel.size()));
        if (K.degree() != 2) throw std::logic_error("quadratic: construction did not yield a quadratic field");
        return K;
    }

    i64 conductor() const { return conductor_; }
    i64 degree() const { return degree_; }
    const std::vector<i64>& subgroup() const { return subgroup_; }
    bool is_rationals() const { return conductor_ == 1; }

    bool is_totally_real() const {
        return conductor_ == 1 || in_subgroup(mod_reduce(-1, conductor_));
    }

    /// Largest w with zeta_w in K. Always even.
    i64 roots_of_unity_order() const {
        i64 M = ambient_root_order();
        i64 w = M;
        for (i64 h : subgroup_) w = std::gcd(w, lift_to_ambient(h) - 1);
        return w;
    }

    /// True iff `other` is a subfield of *this.
    bool contains(const AbelianField& other) const {
        if (conductor_ % other.conductor_ != 0) return false;
        for (i64 h : subgroup_) {
            if (!other.in_subgroup(mod_reduce(h, other.conductor_))) return false;
        }
        return true;
    }

    /// Splitting data of a rational prime: write m = p^a * m'; the inertia
    /// subgroup of p in (Z/m)^x is the full (Z/p^a)^x component, and the
    /// decomposition subgroup adds the Frobenius (p mod m', 1 mod p^a).
    PrimeDecomposition decompose_prime(i64 p) const {
        if (!is_prime(p)) throw std::invalid_argument("decompose_prime: not a prime");
        i64 pa = 1;
        i64 mp = conductor_;
        while (mp % p == 0) {
            mp /= p;
            pa *= p;
        }

        std::vector<i64> inertia_seeds;
        for (i64 x : unit_residues(conductor_)) {
            if (mod_reduce(x, mp) == mod_reduce(1, mp)) inertia_seeds.push_back(x);
        }
        i64 frob = crt(1, pa, p, mp);

        std::vector<i64> ih_seeds = inertia_seeds;
        ih_seeds.insert(ih_seeds.end(), subgroup_.begin(), subgroup_.end());
        std::vector<i64> inertia_h = closure(conductor_, ih_seeds);

        std::vector<i64> dh_seeds = ih_seeds;
        dh_seeds.push_back(frob);
        std::vector<i64> decomp_h = closure(conductor_, dh_seeds);

        PrimeDecomposition dec;
        dec.e = static_cast<i64>(inertia_h.size()) / static_cast<i64>(subgroup_.size());
        i64 ef = static_cast<i64>(decomp_h.size()) / static_cast<i64>(subgroup_.size());
        dec.f = ef / dec.e;
        dec.g = degree_ / ef;
        if (dec.e * dec.f * dec.g != degree_) throw std::logic_error("decompose_prime: efg mismatch");

        dec.cosets = cosets_of(decomp_h);
        for (const auto& coset : dec.cosets) dec.places.push_back(Place::finite(p, coset.front()));
        return dec;
    }

    std::vector<Place> places_over(i64 p) const { return decompose_prime(p).places; }

    /// r real places (cosets of H) when -1 in H, else degree/2 complex
    /// places (cosets of H*{+-1}); abelian fields are never mixed.
    std::vector<Place> archimedean_places() const {
        std::vector<Place> out;
        if (is_totally_real()) {
            for (i64 k = 0; k < degree_; ++k) out.push_back(Place::real(k));
        } else {
            for (i64 k = 0; k < degree_ / 2; ++k) out.push_back(Place::complex(k));
        }
        return out;
    }

    std::vector<GaloisElement> galois_group() const {
        std::vector<GaloisElement> out;
        for (const auto& coset : cosets_of(subgroup_)) out.push_back(GaloisElement{coset.front()});
        return out;
    }

    /// sigma(v) computed on coset labels; Gal(K/Q) permutes the places over
    /// each rational prime transitively. Real places are permuted likewise;
    /// complex places are rejected.
    Place galois_act(const GaloisElement& sigma, const Place& v) const {
        i64 b = mod_reduce(sigma.residue, conductor_);
        if (std::gcd(b, conductor_) != 1) throw std::invalid_argument("galois_act: residue not a unit");
        if (v.kind == Place::Kind::complex)
            throw std::invalid_argument("galois_act: action on complex places is handled separately");
        if (v.kind == Place::Kind::real) {
            if (!is_totally_real() || v.label < 0 || v.label >= degree_)
                throw std::invalid_argument("galois_act: unknown real place");
            auto cosets = cosets_of(subgroup_);
            i64 rep = cosets[static_cast<std::size_t>(v.label)].front();
            i64 image = mul_mod(b, rep, conductor_);
            for (std::size_t k = 0; k < cosets.size(); ++k) {
                if (std::binary_search(cosets[k].begin(), cosets[k].end(), image)) return Place::real(static_cast<i64>(k));
            }
            throw std::logic_error("galois_act: coset lookup failed");
        }
        PrimeDecomposition dec = decompose_prime(v.p);
        i64 image = mul_mod(b, mod_reduce(v.label, conductor_), conductor_);
        for (const auto& coset : dec.cosets) {
            if (std::binary_search(coset.begin(), coset.end(), image)) return Place::finite(v.p, coset.front());
        }
        throw std::invalid_argument("galois_act: place does not belong to the field");
    }

    /// Exponent of sigma acting on zeta_w, for any w | ambient root order.
    i64 zeta_action_exponent(const GaloisElement& sigma, i64 w) const {
        if (w < 1 || ambient_root_order() % w != 0)
            throw std::invalid_argument("zeta_action_exponent: root of unity not in the ambient cyclotomic field");
        i64 b = mod_reduce(sigma.residue, conductor_);
        if (std::gcd(b, conductor_) != 1) throw std::invalid_argument("zeta_action_exponent: residue not a unit");
        return mod_reduce(lift_to_ambient(b), w);
    }

    /// Local degree [K_w : Q_p], the same for every place w over p.
    i64 local_degree(i64 p) const {
        PrimeDecomposition dec = decompose_prime(p);
        return dec.e * dec.f;
    }

    i64 local_degree_at_infinity() const { return is_totally_real() ? 1 : 2; }

    bool is_valid_place(const Place& v) const {
        switch (v.kind) {
            case Place::Kind::real:
                return is_totally_real() && v.label >= 0 && v.label < degree_;
            case Place::Kind::complex:
                return !is_totally_real() && v.label >= 0 && v.label < degree_ / 2;
            case Place::Kind::finite: {
                if (!is_prime(v.p)) return false;
                for (const Place& w : places_over(v.p)) {
                    if (w == v) return true;
                }
                return false;
            }
        }
        return false;
    }

    /// A small generating set of the subgroup, for serialization.
    std::vector<i64> generators_hint() const {
        std::vector<i64> gens;
        std::vector<i64> span = closure(conductor_, {});
        for (i64 h : subgroup_) {
            if (std::binary_search(span.begin(), span.end(), h)) continue;
            gens.push_back(h);
            std::vector<i64> seeds = gens;
            span = closure(conductor_, seeds);
        }
        return gens;
    }

    bool operator==(const AbelianField& o) const {
        return conductor_ == o.conductor_ && subgroup_ == o.subgroup_;
    }

private:
    AbelianField(i64 conductor, std::vector<i64> subgroup)
        : conductor_(conductor), subgroup_(std::move(subgroup)) {
        degree_ = euler_phi(conductor_) / static_cast<i64>(subgroup_.size());
    }

    bool in_subgroup(i64 x) const { return std::binary_search(subgroup_.begin(), subgroup_.end(), x); }

    // Unit residues of Z/m in [0, m); for m = 1 this is {0}, representing 1.
    static std::vector<i64> unit_residues(i64 m) {
        std::vector<i64> out;
        for (i64 x = 0; x < m; ++x) {
            if (std::gcd(x, m) == 1) out.push_back(x);
        }
        return out;
    }

    // Subgroup generated by the seeds inside (Z/m)^x, sorted.
    static std::vector<i64> closure(i64 m, const std::vector<i64>& seeds) {
        std::vector<char> seen(static_cast<std::size_t>(m), 0);
        std::vector<i64> stack{mod_reduce(1, m)};
        seen[static_cast<std::size_t>(mod_reduce(1, m))] = 1;
        while (!stack.empty()) {
            i64 x = stack.back();
            stack.pop_back();
            for (i64 s : seeds) {
                i64 y = mul_mod(x, mod_reduce(s, m), m);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    stack.push_back(y);
                }
            }
        }
        std::vector<i64> out;
        for (i64 x = 0; x < m; ++x) {
            if (seen[static_cast<std::size_t>(x)]) out.push_back(x);
        }
        return out;
    }

    // Cosets of a subgroup S (with H <= S) in (Z/m)^x, each sorted, ordered
    // by minimal representative.
    std::vector<std::vector<i64>> cosets_of(const std::vector<i64>& s) const {
        std::vector<std::vector<i64>> out;
        std::vector<char> assigned(static_cast<std::size_t>(conductor_) + 1, 0);
        for (i64 x : unit_residues(conductor_)) {
            if (assigned[static_cast<std::size_t>(x)]) continue;
            std::vector<i64> coset;
            for (i64 elem : s) {
                i64 y = mul_mod(x, elem, conductor_);
                if (!assigned[static_cast<std::size_t>(y)]) {
                    assigned[static_cast<std::size_t>(y)] = 1;
                    coset.push_back(y);
                }
            }
            std::sort(coset.begin(), coset.end());
            out.push_back(std::move(coset));
        }
        return out;
    }

    // Order of the full group of roots of unity in Q(zeta_m).
    i64 ambient_root_order() const { return conductor_ % 2 == 0 ? conductor_ : 2 * conductor_; }

    // Lift of a unit residue mod m to the unit mod M acting identically on
    // zeta_M; for odd m the lift is the odd representative.
    i64 lift_to_ambient(i64 x) const {
        if (conductor_ % 2 == 0) return x;
        return x % 2 != 0 ? x : x + conductor_;
    }

    i64 conductor_ = 1;
    std::vector<i64> subgroup_;
    i64 degree_ = 1;
};

}  // namespace hasse
