#pragma once

// Finite groups ingested as multiplication tables, together with the
// derived data the representation code needs: conjugacy classes, element
// orders, the exponent, and power maps. Builtins cover the cyclic,
// dihedral, quaternion, and small symmetric groups.

#include "hasse/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

class FiniteGroup {
public:
    static constexpr std::size_t kMaxOrder = 256;

    /// Validates the table as a group: closure (by type), a two-sided
    /// identity, inverses, and full associativity at this scale.
    static FiniteGroup from_table(std::vector<std::vector<int>> table) {
        const std::size_t n = table.size();
        if (n == 0 || n > kMaxOrder) throw std::invalid_argument("not a group: order out of range");
        for (const auto& row : table) {
            if (row.size() != n) throw std::invalid_argument("not a group: table is not square");
            for (int x : row) {
                if (x < 0 || static_cast<std::size_t>(x) >= n) throw std::invalid_argument("not a group: entry out of range");
            }
        }
        int identity = -1;
        for (std::size_t e = 0; e < n; ++e) {
            bool ok = true;
            for (std::size_t x = 0; x < n && ok; ++x) {
                ok = table[e][x] == static_cast<int>(x) && table[x][e] == static_cast<int>(x);
            }
            if (ok) {
                identity = static_cast<int>(e);
                break;
            }
        }
        if (identity < 0) throw std::invalid_argument("not a group: no identity element");
        for (std::size_t x = 0; x < n; ++x) {
            bool has_inverse = false;
            for (std::size_t y = 0; y < n; ++y) {
                if (table[x][y] == identity && table[y][x] == identity) {
                    has_inverse = true;
                    break;
                }
            }
            if (!has_inverse) throw std::invalid_argument("not a group: missing inverse");
        }
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b) {
                for (std::size_t c = 0; c < n; ++c) {
                    if (table[table[a][b]][c] != table[a][table[b][c]])
                        throw std::invalid_argument("not a group: associativity fails");
                }
            }
        }
        return FiniteGroup(std::move(table), identity);
    }

    static FiniteGroup trivial() { return cyclic(1); }

    static FiniteGroup cyclic(int n) {
        require_order(n);
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        }
        return from_table(std::move(t));
    }

    /// Dihedral group of order 2n; element i + n*j is r^i s^j.
    static FiniteGroup dihedral(int n) {
        require_order(2 * n);
        if (n < 1) throw std::invalid_argument("dihedral: n must be positive");
        auto idx = [n](int i, int j) { return mod_reduce(i, n) + n * j; };
        std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
        for (int i1 = 0; i1 < n; ++i1) {
            for (int j1 = 0; j1 < 2; ++j1) {
                for (int i2 = 0; i2 < n; ++i2) {
                    for (int j2 = 0; j2 < 2; ++j2) {
                        int i = j1 == 0 ? i1 + i2 : i1 - i2;
                        t[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                    }
                }
            }
        }
        return from_table(std::move(t));
    }

    /// Quaternion group of order 8; elements are +-1, +-i, +-j, +-k encoded
    /// as basis*2 + (sign < 0).
    static FiniteGroup quaternion8() {
        // Basis products in {1, i, j, k} with a sign.
        constexpr int basis_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        constexpr int basis_sign[4][4] = {{+1, +1, +1, +1}, {+1, -1, +1, -1}, {+1, -1, -1, +1}, {+1, +1, -1, -1}};
        std::vector<std::vector<int>> t(8, std::vector<int>(8));
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b) {
                int ba = a / 2, sa = a % 2 == 0 ? 1 : -1;
                int bb = b / 2, sb = b % 2 == 0 ? 1 : -1;
                int bc = basis_mul[ba][bb];
                int sc = sa * sb * basis_sign[ba][bb];
                t[a][b] = bc * 2 + (sc < 0 ? 1 : 0);
            }
        }
        return from_table(std::move(t));
    }

    /// Symmetric group on n <= 5 letters, elements indexed by lexicographic
    /// rank; composition is (p*q)(x) = p(q(x)).
    static FiniteGroup symmetric(int n) {
        if (n < 1 || n > 5) throw std::invalid_argument("symmetric: n must be between 1 and 5");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        do {
            perms.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        auto rank = [&](const std::vector<int>& q) {
            return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        const int order = static_cast<int>(perms.size());
        std::vector<std::vector<int>> t(order, std::vector<int>(order));
        for (int a = 0; a < order; ++a) {
            for (int b = 0; b < order; ++b) {
                std::vector<int> c(n);
                for (int x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
                t[a][b] = rank(c);
            }
        }
        return from_table(std::move(t));
    }

    /// Builtin lookup by name: "trivial", "Cn", "Dn" (order 2n), "Q8", "Sn".
    static FiniteGroup builtin(const std::string& name) {
        if (name == "trivial") return trivial();
        if (name == "Q8" || name == "q8") return quaternion8();
        if (name.size() >= 2) {
            char kind = name[0];
            try {
                int n = std::stoi(name.substr(1));
                if (kind == 'C' || kind == 'c') return cyclic(n);
                if (kind == 'D' || kind == 'd') return dihedral(n);
                if (kind == 'S' || kind == 's') return symmetric(n);
            } catch (const std::invalid_argument&) {
            } catch (const std::out_of_range&) {
            }
        }
        throw std::invalid_argument("unknown builtin group '" + name + "'");
    }

    std::size_t order() const { return table_.size(); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    int power(int g, i64 k) const {
        i64 n = element_order(g);
        k = mod_reduce(k, n);
        int acc = identity_;
        int base = g;
        while (k > 0) {
            if (k & 1) acc = mul(acc, base);
            base = mul(base, base);
            k >>= 1;
        }
        return acc;
    }

    i64 element_order(int g) const { return element_order_[static_cast<std::size_t>(g)]; }
    i64 exponent() const { return exponent_; }

    std::size_t class_count() const { return classes_.size(); }
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int g) const { return class_of_[static_cast<std::size_t>(g)]; }
    int representative(std::size_t cls) const { return classes_[cls].front(); }
    i64 class_size(std::size_t cls) const { return static_cast<i64>(classes_[cls].size()); }

    /// Class index of rep(cls)^k; the class of a power is well defined.
    int class_of_power(std::size_t cls, i64 k) const { return class_of(power(representative(cls), k)); }

    bool operator==(const FiniteGroup& o) const { return table_ == o.table_; }

private:
    explicit FiniteGroup(std::vector<std::vector<int>> table, int identity)
        : table_(std::move(table)), identity_(identity) {
        const std::size_t n = table_.size();
        inverse_.assign(n, 0);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                if (table_[x][y] == identity_) {
                    inverse_[x] = static_cast<int>(y);
                    break;
                }
            }
        }
        element_order_.assign(n, 1);
        exponent_ = 1;
        for (std::size_t g = 0; g < n; ++g) {
            i64 ord = 1;
            int x = static_cast<int>(g);
            while (x != identity_) {
                x = mul(x, static_cast<int>(g));
                ++ord;
            }
            element_order_[g] = ord;
            exponent_ = std::lcm(exponent_, ord);
        }

        // Conjugacy classes, identity class first, then by minimal element.
        class_of_.assign(n, -1);
        std::vector<char> seen(n, 0);
        auto emit_class = [&](int g) {
            if (seen[static_cast<std::size_t>(g)]) return;
            std::vector<int> cls;
            for (std::size_t x = 0; x < n; ++x) {
                int conj = mul(mul(static_cast<int>(x), g), inverse_[x]);
                if (!seen[static_cast<std::size_t>(conj)]) {
                    seen[static_cast<std::size_t>(conj)] = 1;
                    cls.push_back(conj);
                }
            }
            std::sort(cls.begin(), cls.end());
            for (int x : cls) class_of_[static_cast<std::size_t>(x)] = static_cast<int>(classes_.size());
            classes_.push_back(std::move(cls));
        };
        emit_class(identity_);
        for (std::size_t g = 0; g < n; ++g) emit_class(static_cast<int>(g));
    }

    static void require_order(int n) {
        if (n < 1 || static_cast<std::size_t>(n) > kMaxOrder)
            throw std::invalid_argument("group order out of range");
    }

    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::vector<int> element_order_;
    i64 exponent_ = 1;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

}  // namespace hasse
