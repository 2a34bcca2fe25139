#pragma once

// Combinatorial backbone: the abstract Kummer (16_6), tetrads on the
// 16-line graph of a quartic del Pezzo surface, symplectic F_2^4 counts,
// duads vs synthemes, and the (8_4) diagram.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "k3k/incidence.hpp"

namespace k3k {

// ---- label helpers over {1..6} ------------------------------------------------

struct Partition33 {
    std::array<int, 3> left;   // the triple containing 1, ascending
    std::array<int, 3> right;  // complement, ascending
    std::string label() const {
        std::string s;
        for (int x : left) s += char('0' + x);
        s += '|';
        for (int x : right) s += char('0' + x);
        return s;
    }
    bool triple_contains_pair(int a, int b) const {
        auto in = [&](const std::array<int, 3>& t, int v) {
            return t[0] == v || t[1] == v || t[2] == v;
        };
        return (in(left, a) && in(left, b)) || (in(right, a) && in(right, b));
    }
};

inline std::vector<Partition33> partitions33() {
    std::vector<Partition33> out;
    for (int a = 2; a <= 6; ++a)
        for (int b = a + 1; b <= 6; ++b) {
            Partition33 p;
            p.left = {1, a, b};
            int idx = 0;
            for (int v = 2; v <= 6; ++v)
                if (v != a && v != b) p.right[idx++] = v;
            out.push_back(p);
        }
    return out;  // 10 partitions
}

inline std::vector<std::pair<int, int>> duads6() {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) out.push_back({i, j});
    return out;  // 15 duads
}

// ---- abstract Kummer (16_6) ---------------------------------------------------

// A-side: one curve R plus the 15 duad curves; B-side: the 6 singletons plus
// the 10 triple-partitions. R meets every singleton; a duad meets its two
// singletons and the four partitions with the duad inside one triple.
inline IncidenceStructure abstract_kummer() {
    std::vector<std::string> a_labels{"R"};
    auto duads = duads6();
    for (auto [i, j] : duads)
        a_labels.push_back("l" + std::to_string(i) + std::to_string(j));
    std::vector<std::string> b_labels;
    for (int i = 1; i <= 6; ++i) b_labels.push_back("p" + std::to_string(i));
    auto parts = partitions33();
    for (const auto& p : parts) b_labels.push_back(p.label());

    BitMatrix m(16, std::vector<uint8_t>(16, 0));
    for (int j = 0; j < 6; ++j) m[0][j] = 1;  // R through all six points
    for (size_t d = 0; d < duads.size(); ++d) {
        auto [i, j] = duads[d];
        m[d + 1][i - 1] = 1;
        m[d + 1][j - 1] = 1;
        for (size_t p = 0; p < parts.size(); ++p)
            if (parts[p].triple_contains_pair(i, j)) m[d + 1][6 + p] = 1;
    }
    return IncidenceStructure(std::move(a_labels), std::move(b_labels), std::move(m));
}

// ---- 16-line graph of a quartic del Pezzo surface -----------------------------

// Classes over the rank-6 form (H^2=1, E_i^2=-1, mixed 0):
// L0 = 2H - E1 - ... - E5, Li = E_i, Lij = H - E_i - E_j.
class DP4LineGraph {
  public:
    DP4LineGraph() {
        // class vectors (h, e1..e5)
        classes_.push_back({2, -1, -1, -1, -1, -1});
        labels_.push_back("L0");
        for (int i = 1; i <= 5; ++i) {
            std::array<int, 6> v{};
            v[i] = 1;
            classes_.push_back(v);
            labels_.push_back("L" + std::to_string(i));
        }
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 5; ++j) {
                std::array<int, 6> v{1, 0, 0, 0, 0, 0};
                v[i] = -1;
                v[j] = -1;
                classes_.push_back(v);
                labels_.push_back("L" + std::to_string(i) + std::to_string(j));
            }
    }

    int size() const { return int(labels_.size()); }  // 16
    const std::vector<std::string>& labels() const { return labels_; }

    int inter(int a, int b) const {
        const auto& u = classes_[a];
        const auto& v = classes_[b];
        int s = u[0] * v[0];
        for (int i = 1; i <= 5; ++i) s -= u[i] * v[i];
        return s;
    }

    int index_of(const std::string& l) const {
        for (int i = 0; i < size(); ++i)
            if (labels_[i] == l) return i;
        throw std::invalid_argument("unknown line label: " + l);
    }

  private:
    std::vector<std::array<int, 6>> classes_;
    std::vector<std::string> labels_;
};

using Tetrad = std::array<int, 4>;  // indices into DP4LineGraph

inline bool pairwise_skew(const DP4LineGraph& g, const Tetrad& t) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (g.inter(t[a], t[b]) != 0) return false;
    return true;
}

// All unordered pairs of disjoint skew tetrads where every line of one meets
// exactly three lines of the other.
inline std::vector<std::pair<Tetrad, Tetrad>> rosenhain_enumerate(const DP4LineGraph& g) {
    std::vector<Tetrad> skew;
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    Tetrad t{a, b, c, d};
                    if (pairwise_skew(g, t)) skew.push_back(t);
                }
    std::vector<std::pair<Tetrad, Tetrad>> pairs;
    for (size_t i = 0; i < skew.size(); ++i)
        for (size_t j = i + 1; j < skew.size(); ++j) {
            const Tetrad &t1 = skew[i], &t2 = skew[j];
            bool disjoint = true;
            for (int a : t1)
                for (int b : t2)
                    if (a == b) disjoint = false;
            if (!disjoint) continue;
            bool ok = true;
            for (int a : t1) {
                int deg = 0;
                for (int b : t2) deg += (g.inter(a, b) == 1);
                if (deg != 3) ok = false;
            }
            for (int b : t2) {
                int deg = 0;
                for (int a : t1) deg += (g.inter(a, b) == 1);
                if (deg != 3) ok = false;
            }
            if (ok) pairs.push_back({t1, t2});
        }
    return pairs;
}

// Tetrads {L_i, L_j, L_kl, L_km} with {i,j} disjoint from {k,l,m}, all skew.
inline std::vector<Tetrad> goepel_enumerate(const DP4LineGraph& g) {
    std::vector<Tetrad> out;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            std::vector<int> rest;
            for (int v = 1; v <= 5; ++v)
                if (v != i && v != j) rest.push_back(v);
            // pick the shared index k among the remaining three
            for (int ki = 0; ki < 3; ++ki) {
                int k = rest[ki];
                int l = rest[(ki + 1) % 3], m = rest[(ki + 2) % 3];
                if (l > m) std::swap(l, m);
                auto lab = [&](int x, int y) {
                    if (x > y) std::swap(x, y);
                    return "L" + std::to_string(x) + std::to_string(y);
                };
                Tetrad t{g.index_of("L" + std::to_string(i)),
                         g.index_of("L" + std::to_string(j)), g.index_of(lab(k, l)),
                         g.index_of(lab(k, m))};
                if (!pairwise_skew(g, t))
                    throw std::logic_error("goepel tetrad not skew");
                out.push_back(t);
            }
        }
    return out;
}

// Union of a Rosenhain pair as an 8x8 incidence: both sides are the 8 lines,
// a line is incident to itself and to the lines it meets.
inline IncidenceStructure rosenhain_union_incidence(const DP4LineGraph& g,
                                                    const std::pair<Tetrad, Tetrad>& pr) {
    std::vector<int> all;
    for (int a : pr.first) all.push_back(a);
    for (int b : pr.second) all.push_back(b);
    std::vector<std::string> labs, labs2;
    for (int a : all) {
        labs.push_back(g.labels()[a]);
        labs2.push_back(g.labels()[a] + "'");
    }
    BitMatrix m(8, std::vector<uint8_t>(8, 0));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            m[i][j] = uint8_t(i == j || g.inter(all[i], all[j]) == 1);
    return IncidenceStructure(std::move(labs), std::move(labs2), std::move(m));
}

// ---- symplectic F_2^4 ---------------------------------------------------------

struct SymplecticCounts {
    int planes = 0;         // 2-dimensional subspaces
    int isotropic = 0;      // totally isotropic planes
    int nonisotropic = 0;
    int goepel_cosets = 0;     // translates of isotropic planes
    int rosenhain_cosets = 0;  // translates of non-isotropic planes
};

// <u,v> = u0 v2 + u2 v0 + u1 v3 + u3 v1 on bit vectors of length 4.
inline int symplectic_form(int u, int v) {
    auto bit = [](int x, int i) { return (x >> i) & 1; };
    return (bit(u, 0) & bit(v, 2)) ^ (bit(u, 2) & bit(v, 0)) ^ (bit(u, 1) & bit(v, 3)) ^
           (bit(u, 3) & bit(v, 1));
}

inline SymplecticCounts symplectic_counts() {
    SymplecticCounts out;
    std::set<std::set<int>> planes;
    for (int u = 1; u < 16; ++u)
        for (int v = u + 1; v < 16; ++v) {
            if (v == u) continue;
            std::set<int> plane{0, u, v, u ^ v};
            if (plane.size() != 4) continue;  // v in <u>
            planes.insert(plane);
        }
    out.planes = int(planes.size());
    for (const auto& plane : planes) {
        bool iso = true;
        for (int u : plane)
            for (int v : plane)
                if (symplectic_form(u, v)) iso = false;
        int cosets = 16 / 4;
        if (iso) {
            out.isotropic += 1;
            out.goepel_cosets += cosets;
        } else {
            out.nonisotropic += 1;
            out.rosenhain_cosets += cosets;
        }
    }
    return out;
}

// ---- Cremona-Richmond (15_3): duads vs synthemes ------------------------------

inline IncidenceStructure cremona_richmond() {
    auto duads = duads6();
    // synthemes: perfect matchings of {1..6} into three duads
    std::vector<std::array<std::pair<int, int>, 3>> synthemes;
    // 1 pairs with a; smallest remaining pairs with b; rest forced
    for (int a = 2; a <= 6; ++a) {
        std::vector<int> rest;
        for (int v = 2; v <= 6; ++v)
            if (v != a) rest.push_back(v);
        // rest has 4 elements; rest[0] is smallest
        for (int bi = 1; bi < 4; ++bi) {
            std::array<std::pair<int, int>, 3> syn;
            syn[0] = {1, a};
            syn[1] = {rest[0], rest[bi]};
            std::vector<int> last;
            for (int k = 1; k < 4; ++k)
                if (k != bi) last.push_back(rest[k]);
            syn[2] = {std::min(last[0], last[1]), std::max(last[0], last[1])};
            synthemes.push_back(syn);
        }
    }
    std::vector<std::string> a_labels, b_labels;
    for (auto [i, j] : duads) a_labels.push_back(std::to_string(i) + std::to_string(j));
    for (const auto& s : synthemes) {
        std::string lab;
        for (auto [i, j] : s) lab += std::to_string(i) + std::to_string(j) + ".";
        b_labels.push_back(lab);
    }
    BitMatrix m(15, std::vector<uint8_t>(15, 0));
    for (size_t d = 0; d < duads.size(); ++d)
        for (size_t s = 0; s < synthemes.size(); ++s)
            for (const auto& pr : synthemes[s])
                if (pr == duads[d]) m[d][s] = 1;
    return IncidenceStructure(std::move(a_labels), std::move(b_labels), std::move(m));
}

// No two points on two common lines (girth > 4 on a (15_3)).
inline bool no_digon(const IncidenceStructure& inc) {
    for (size_t i1 = 0; i1 < inc.rows(); ++i1)
        for (size_t i2 = i1 + 1; i2 < inc.rows(); ++i2) {
            int common = 0;
            for (size_t j = 0; j < inc.cols(); ++j)
                common += inc.matrix[i1][j] & inc.matrix[i2][j];
            if (common >= 2) return false;
        }
    return true;
}

// ---- the (8_4) diagram --------------------------------------------------------

// Two columns of four: point (s,i) lies on the plane (1-s,i) in the other
// column plus the three planes (s,j), j != i, on its own side.
inline IncidenceStructure diagram_8_4() {
    std::vector<std::string> pts, pls;
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 4; ++i) {
            pts.push_back("x" + std::to_string(s) + std::to_string(i));
            pls.push_back("h" + std::to_string(s) + std::to_string(i));
        }
    BitMatrix m(8, std::vector<uint8_t>(8, 0));
    auto idx = [](int s, int i) { return s * 4 + i; };
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < 4; ++i) {
            m[idx(s, i)][idx(1 - s, i)] = 1;
            for (int j = 0; j < 4; ++j)
                if (j != i) m[idx(s, i)][idx(s, j)] = 1;
        }
    return IncidenceStructure(std::move(pts), std::move(pls), std::move(m));
}

// A degenerate symmetric (16_6): two independent 8x8 circulant blocks, so
// column pairs from different blocks share no rows at all.
inline IncidenceStructure degenerate_16_6() {
    std::vector<std::string> a, b;
    for (int i = 0; i < 16; ++i) {
        a.push_back("a" + std::to_string(i));
        b.push_back("b" + std::to_string(i));
    }
    BitMatrix m(16, std::vector<uint8_t>(16, 0));
    for (int i = 0; i < 16; ++i)
        for (int d = 0; d < 6; ++d) m[i][(i / 8) * 8 + (i + d) % 8] = 1;
    return IncidenceStructure(std::move(a), std::move(b), std::move(m));
}

}  // namespace k3k
