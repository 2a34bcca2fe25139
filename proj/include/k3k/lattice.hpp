#pragma once

// Exact integer lattice arithmetic: Gram matrices, Smith normal form,
// discriminant groups, and the small intersection-theory identities used by
// the verification suites. All matrices are at most 40x40 with small entries.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3k/incidence.hpp"

namespace k3k {

using IntMat = std::vector<std::vector<int64_t>>;

struct GramLattice {
    IntMat m;

    explicit GramLattice(IntMat mm) : m(std::move(mm)) {
        size_t n = m.size();
        for (size_t i = 0; i < n; ++i) {
            if (m[i].size() != n) throw std::invalid_argument("Gram matrix not square");
            for (size_t j = 0; j < n; ++j)
                if (m[i][j] != m[j][i]) throw std::invalid_argument("Gram matrix not symmetric");
        }
    }

    size_t rank() const { return m.size(); }
};

enum class BuiltinLattice { A1, D4, U };

inline GramLattice gram_builtin(BuiltinLattice which) {
    switch (which) {
        case BuiltinLattice::A1:
            return GramLattice(IntMat{{-2}});
        case BuiltinLattice::D4: {
            // negative-definite D4: node 0 joined to nodes 1,2,3
            IntMat m(4, std::vector<int64_t>(4, 0));
            for (int i = 0; i < 4; ++i) m[i][i] = -2;
            for (int j = 1; j < 4; ++j) m[0][j] = m[j][0] = 1;
            return GramLattice(std::move(m));
        }
        case BuiltinLattice::U:
            return GramLattice(IntMat{{0, 1}, {1, 0}});
    }
    throw std::invalid_argument("unknown builtin lattice");
}

inline GramLattice direct_sum(const std::vector<GramLattice>& parts) {
    size_t n = 0;
    for (const auto& p : parts) n += p.rank();
    IntMat m(n, std::vector<int64_t>(n, 0));
    size_t off = 0;
    for (const auto& p : parts) {
        for (size_t i = 0; i < p.rank(); ++i)
            for (size_t j = 0; j < p.rank(); ++j) m[off + i][off + j] = p.m[i][j];
        off += p.rank();
    }
    return GramLattice(std::move(m));
}

// Fraction-free (Bareiss) determinant.
inline int64_t int_det(IntMat m) {
    size_t n = m.size();
    if (n == 0) return 1;
    using I = __int128;
    std::vector<std::vector<I>> a(n, std::vector<I>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    I prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return int64_t(sign * a[n - 1][n - 1]);
}

inline int64_t discriminant(const GramLattice& g) { return int_det(g.m); }

// Smith normal form divisors d1 | d2 | ... (nonnegative; zeros last).
inline std::vector<int64_t> smith_normal_form(const GramLattice& g) {
    IntMat a = g.m;
    size_t n = a.size();
    std::vector<int64_t> divisors;
    size_t t = 0;
    while (t < n) {
        // find smallest nonzero pivot in the remaining block
        size_t pi = n, pj = n;
        int64_t best = 0;
        for (size_t i = t; i < n; ++i)
            for (size_t j = t; j < n; ++j) {
                int64_t v = a[i][j] < 0 ? -a[i][j] : a[i][j];
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;  // rest is zero
        std::swap(a[t], a[pi]);
        for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][pj]);
        bool reduced = false;
        while (!reduced) {
            reduced = true;
            for (size_t i = t + 1; i < n; ++i) {
                if (a[i][t] != 0) {
                    int64_t q = a[i][t] / a[t][t];
                    for (size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
                    if (a[i][t] != 0) {
                        std::swap(a[t], a[i]);
                        reduced = false;
                    }
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] != 0) {
                    int64_t q = a[t][j] / a[t][t];
                    for (size_t i = t; i < n; ++i) a[i][j] -= q * a[i][t];
                    if (a[t][j] != 0) {
                        for (size_t i = 0; i < n; ++i) std::swap(a[i][t], a[i][j]);
                        reduced = false;
                    }
                }
            }
        }
        divisors.push_back(a[t][t] < 0 ? -a[t][t] : a[t][t]);
        ++t;
    }
    // enforce the divisibility chain d_i | d_{i+1}
    for (size_t i = 0; i + 1 < divisors.size(); ++i) {
        for (size_t j = i + 1; j < divisors.size(); ++j) {
            if (divisors[j] % divisors[i] != 0) {
                // gcd/lcm swap
                int64_t x = divisors[i], y = divisors[j];
                int64_t g2 = x, h = y;
                while (h) {
                    int64_t r = g2 % h;
                    g2 = h;
                    h = r;
                }
                int64_t l = x / g2 * y;
                divisors[i] = g2;
                divisors[j] = l;
            }
        }
    }
    while (divisors.size() < n) divisors.push_back(0);
    return divisors;
}

// Count of even elementary divisors: the 2-rank of the discriminant group
// when that group is 2-elementary.
inline int two_rank(const std::vector<int64_t>& divisors) {
    int r = 0;
    for (int64_t d : divisors)
        if (d != 0 && d % 2 == 0) ++r;
    return r;
}

struct ShiodaTateResult {
    uint64_t disc_trivial;  // |disc| of the fiber-component lattice
    uint64_t disc_pic;      // after dividing by mw_order^2
    std::optional<int> sigma;  // half the 2-exponent, when disc_pic = 2^(2*sigma)
};

// Fiber lattice D4^3 + A1^8 has |disc| = 4^3 * 2^8 = 2^14; the discriminant
// formula divides by the square of the Mordell-Weil order.
inline ShiodaTateResult shioda_tate_bound(uint64_t mw_order) {
    std::vector<GramLattice> parts;
    for (int i = 0; i < 3; ++i) parts.push_back(gram_builtin(BuiltinLattice::D4));
    for (int i = 0; i < 8; ++i) parts.push_back(gram_builtin(BuiltinLattice::A1));
    GramLattice m = direct_sum(parts);
    int64_t d = discriminant(m);
    uint64_t ad = uint64_t(d < 0 ? -d : d);
    ShiodaTateResult out{ad, 0, std::nullopt};
    uint64_t sq = mw_order * mw_order;
    if (ad % sq != 0) return out;
    uint64_t dp = ad / sq;
    out.disc_pic = dp;
    int e = 0;
    uint64_t v = dp;
    while (v % 2 == 0) {
        v /= 2;
        ++e;
    }
    if (v == 1 && e % 2 == 0) out.sigma = e / 2;
    return out;
}

// Gram matrix of the 32 curve classes of a (16_6): self-intersection -2,
// cross intersections given by the incidence matrix.
inline GramLattice config_gram(const IncidenceStructure& inc) {
    size_t na = inc.rows(), nb = inc.cols();
    IntMat m(na + nb, std::vector<int64_t>(na + nb, 0));
    for (size_t i = 0; i < na + nb; ++i) m[i][i] = -2;
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) m[i][na + j] = m[na + j][i] = inc.matrix[i][j];
    return GramLattice(std::move(m));
}

inline int64_t divisor_pairing(const std::vector<int64_t>& d1, const std::vector<int64_t>& d2,
                               const GramLattice& g) {
    if (d1.size() != g.rank() || d2.size() != g.rank())
        throw std::invalid_argument("divisor length mismatch");
    int64_t s = 0;
    for (size_t i = 0; i < g.rank(); ++i)
        for (size_t j = 0; j < g.rank(); ++j) s += d1[i] * g.m[i][j] * d2[j];
    return s;
}

struct FiberType {
    std::string name;
    int rank_contribution;
    int fiber_discriminant;
    int euler_lower_bound;
};

inline FiberType fiber_D4tilde() { return {"D4tilde", 4, 4, 6}; }
inline FiberType fiber_A1star() { return {"A1star", 1, 2, 2}; }

struct EulerBoundResult {
    int total;
    bool exceeds;
};

inline EulerBoundResult euler_bound(const std::vector<FiberType>& fibers, int budget) {
    int s = 0;
    for (const auto& f : fibers) s += f.euler_lower_bound;
    return {s, s > budget};
}

// Solve lhs = -64 + 32n over the integers.
inline int64_t index_from_identity(int64_t lhs) {
    if ((lhs + 64) % 32 != 0) throw std::invalid_argument("identity has no integer solution");
    return (lhs + 64) / 32;
}

// Square of the sum of all 32 classes on the configuration Gram.
inline int64_t config_total_square(const IncidenceStructure& inc) {
    GramLattice g = config_gram(inc);
    std::vector<int64_t> ones(g.rank(), 1);
    return divisor_pairing(ones, ones, g);
}

enum class RuledSurface { P2, Quadric };

// c2(Omega) + c1(Omega).c1(M) + c1(M)^2 for a line bundle M on P^2 (degree
// given as one integer) or on a smooth quadric (bidegree pair).
inline int64_t chern_count(RuledSurface s, const std::vector<int64_t>& twist) {
    if (s == RuledSurface::P2) {
        if (twist.size() != 1) throw std::invalid_argument("P2 twist needs one degree");
        int64_t d = twist[0];
        return 3 + (-3) * d + d * d;
    }
    if (twist.size() != 2) throw std::invalid_argument("quadric twist needs a bidegree");
    int64_t a = twist[0], b = twist[1];
    // intersection form: (a1,b1).(a2,b2) = a1 b2 + b1 a2; c1(Omega) = (-2,-2)
    return 4 + ((-2) * b + (-2) * a) + 2 * a * b;
}

}  // namespace k3k
