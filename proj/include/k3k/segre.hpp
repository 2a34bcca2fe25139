#pragma once

// The ten-nodal cubic threefold in P^4 over fields of characteristic 2, the
// quadric parametrization from P^3, two five-dimensional linear F2
// representations of the symmetric group on six letters, polar quadrics, and
// the degree-two cover of P^4 branched along an invariant quadric.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3k/mvpoly.hpp"
#include "k3k/projgeom.hpp"
#include "k3k/weddle.hpp"

namespace k3k {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};
struct DegeneratePolar : std::runtime_error {
    explicit DegeneratePolar(const std::string& what) : std::runtime_error(what) {}
};

// x1x2x4 + x0x3x4 + x1x2x3 + x0x1x3 + x0x2x3 + x0^2x3 (all signs coincide)
inline MultiPoly segre_equation(FieldSpec spec) {
    MultiPoly f(spec, 5);
    Fq one = Fq::one(spec);
    auto add = [&](int a, int b, int c) {
        Expo e(5, 0);
        e[a] += 1;
        e[b] += 1;
        e[c] += 1;
        f.add_term(std::move(e), one);
    };
    add(1, 2, 4);
    add(0, 3, 4);
    add(1, 2, 3);
    add(0, 1, 3);
    add(0, 2, 3);
    add(0, 0, 3);
    return f;
}

// The ten nodes, all with 0/1 coordinates; each is verified singular.
inline std::vector<ProjPoint> segre_nodes(FieldSpec spec) {
    MultiPoly f = segre_equation(spec);
    Fq z = Fq::zero(spec), o = Fq::one(spec);
    auto P = [&](int a, int b, int c, int d, int e) {
        FqVec v{a ? o : z, b ? o : z, c ? o : z, d ? o : z, e ? o : z};
        return ProjPoint(std::move(v));
    };
    std::vector<ProjPoint> nodes{P(0, 0, 0, 0, 1), P(0, 0, 0, 1, 0), P(0, 0, 1, 0, 0),
                                 P(0, 1, 0, 0, 0), P(0, 1, 0, 1, 1), P(0, 0, 1, 1, 1),
                                 P(1, 1, 0, 0, 0), P(1, 0, 1, 0, 0), P(1, 0, 0, 0, 1),
                                 P(1, 1, 1, 1, 0)};
    for (const auto& n : nodes)
        if (!is_singular_at(f, n.coords()))
            throw VerificationFailure("expected node fails: " + n.to_string());
    return nodes;
}

// Quadric parametrization P^3 --> the cubic, through five reference points.
// The second component is t3(t1+t2); together with the other four this is the
// unique choice of that shape whose image satisfies the cubic identically.
inline PolyMap phi_map(FieldSpec spec) {
    auto V = [&](int i) { return MultiPoly::variable(spec, 4, i); };
    std::vector<MultiPoly> comps{V(3) * (V(0) + V(1)), V(3) * (V(1) + V(2)),
                                 V(2) * (V(0) + V(1)), V(2) * (V(1) + V(3)),
                                 (V(0) + V(2)) * (V(1) + V(3))};
    return PolyMap(4, std::move(comps));
}

// ---- F2 matrix group machinery ----------------------------------------------

struct MatF2 {
    int n = 5;
    std::array<std::array<uint8_t, 5>, 5> m{};

    static MatF2 identity(int n) {
        MatF2 r;
        r.n = n;
        for (int i = 0; i < n; ++i) r.m[i][i] = 1;
        return r;
    }

    MatF2 operator*(const MatF2& o) const {
        MatF2 r;
        r.n = n;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                uint8_t s = 0;
                for (int k = 0; k < n; ++k) s ^= m[i][k] & o.m[k][j];
                r.m[i][j] = s;
            }
        return r;
    }

    uint32_t encode() const {
        uint32_t v = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v = (v << 1) | m[i][j];
        return v;
    }

    bool operator==(const MatF2& o) const { return n == o.n && m == o.m; }
    bool operator<(const MatF2& o) const { return encode() < o.encode(); }

    // induced substitution x_i -> sum_j m[i][j] x_j over any GF(2^k)
    std::vector<MultiPoly> substitution(FieldSpec spec) const {
        std::vector<MultiPoly> comps;
        for (int i = 0; i < n; ++i) {
            MultiPoly c(spec, n);
            for (int j = 0; j < n; ++j)
                if (m[i][j]) c.add_term(MultiPoly::variable(spec, n, j).terms().begin()->first,
                                        Fq::one(spec));
            comps.push_back(std::move(c));
        }
        return comps;
    }

    std::vector<Fq> apply(const std::vector<Fq>& v) const {
        std::vector<Fq> out(size_t(n), Fq::zero(v[0].spec()));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m[i][j]) out[i] = out[i] + v[j];
        return out;
    }
};

inline MatF2 matf2_from_rows(const std::array<std::array<uint8_t, 5>, 5>& rows) {
    MatF2 r;
    r.n = 5;
    r.m = rows;
    return r;
}

// generators for the five adjacent transpositions, partition (3,3) shape
inline std::vector<MatF2> rep33_generators() {
    return {
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {1, 1, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {0, 0, 1, 1, 0},
                          {1, 0, 1, 0, 1}}}),
        matf2_from_rows({{{1, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {1, 1, 0, 0, 1},
                          {0, 1, 0, 1, 0},
                          {1, 0, 1, 0, 0}}}),
        matf2_from_rows({{{0, 0, 1, 0, 0},
                          {0, 0, 0, 1, 0},
                          {1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {1, 0, 1, 0, 1}}}),
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {1, 0, 1, 0, 0},
                          {0, 1, 0, 1, 0},
                          {1, 1, 0, 0, 1}}}),
        matf2_from_rows({{{0, 0, 1, 0, 0},
                          {1, 1, 1, 0, 1},
                          {1, 0, 0, 0, 0},
                          {0, 0, 0, 1, 1},
                          {0, 0, 0, 0, 1}}}),
    };
}

// generators for the same five transpositions, partition (2,2,2) shape
inline std::vector<MatF2> rep222_generators() {
    return {
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {1, 1, 0, 1, 0},
                          {1, 0, 1, 0, 1}}}),
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {0, 0, 0, 1, 0},
                          {0, 0, 0, 0, 1},
                          {0, 1, 0, 0, 0},
                          {0, 0, 1, 0, 0}}}),
        matf2_from_rows({{{0, 1, 0, 0, 0},
                          {1, 0, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {0, 0, 0, 1, 0},
                          {1, 1, 1, 1, 1}}}),
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {0, 1, 0, 0, 0},
                          {0, 0, 0, 0, 1},
                          {0, 0, 0, 1, 0}}}),
        matf2_from_rows({{{1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {1, 1, 1, 0, 0},
                          {0, 0, 0, 1, 0},
                          {1, 0, 0, 1, 1}}}),
    };
}

// Full closure under multiplication, with a hard cap.
inline std::set<MatF2> group_closure(const std::vector<MatF2>& gens, size_t cap = 100000) {
    std::set<MatF2> group;
    std::vector<MatF2> frontier{MatF2::identity(5)};
    group.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<MatF2> next;
        for (const auto& g : frontier)
            for (const auto& s : gens) {
                MatF2 h = g * s;
                if (group.insert(h).second) {
                    next.push_back(h);
                    if (group.size() > cap) throw CapExceeded("group closure exceeded cap");
                }
            }
        frontier = std::move(next);
    }
    return group;
}

// The defining relations of the symmetric group on six letters for a chain of
// adjacent transpositions: involutions, braid triples, distant commutation.
inline bool coxeter_relations_hold(const std::vector<MatF2>& g) {
    if (g.size() != 5) return false;
    MatF2 id = MatF2::identity(5);
    for (int i = 0; i < 5; ++i)
        if (!(g[i] * g[i] == id)) return false;
    for (int i = 0; i + 1 < 5; ++i) {
        MatF2 p = g[i] * g[i + 1];
        if (!(p * p * p == id)) return false;
    }
    for (int i = 0; i < 5; ++i)
        for (int j = i + 2; j < 5; ++j) {
            MatF2 p = g[i] * g[j];
            if (!(p * p == id)) return false;
        }
    return true;
}

inline bool preserves(const MultiPoly& f, const MatF2& g) {
    return f.substituted(g.substitution(f.spec())) == f;
}

// Common fixed space of the group over F2, as 0/1 basis vectors: kernel of
// the stacked matrices g - I.
inline std::vector<std::array<uint8_t, 5>> fixed_space_f2(const std::vector<MatF2>& gens) {
    std::vector<std::array<uint8_t, 5>> rows;
    for (const auto& g : gens)
        for (int i = 0; i < 5; ++i) {
            std::array<uint8_t, 5> r{};
            for (int j = 0; j < 5; ++j) r[j] = g.m[i][j] ^ uint8_t(i == j);
            rows.push_back(r);
        }
    // Gaussian elimination over F2
    size_t nr = rows.size();
    std::vector<int> pivots;
    size_t row = 0;
    for (int c = 0; c < 5 && row < nr; ++c) {
        size_t pr = row;
        while (pr < nr && !rows[pr][c]) ++pr;
        if (pr == nr) continue;
        std::swap(rows[row], rows[pr]);
        for (size_t r = 0; r < nr; ++r)
            if (r != row && rows[r][c])
                for (int j = 0; j < 5; ++j) rows[r][j] ^= rows[row][j];
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::array<uint8_t, 5>> basis;
    for (int c = 0; c < 5; ++c) {
        if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
        std::array<uint8_t, 5> v{};
        v[c] = 1;
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = rows[r][c];
        basis.push_back(v);
    }
    return basis;
}

// First polar of f with pole at x: sum x_i * df/dx_i.
inline MultiPoly polar_quadric(const MultiPoly& f, const std::vector<Fq>& x) {
    if (int(x.size()) != f.nvars()) throw ArityMismatch("polar pole arity");
    MultiPoly r(f.spec(), f.nvars());
    for (int i = 0; i < f.nvars(); ++i) r = r + f.partial(i).scaled(x[i]);
    if (r.is_zero()) throw DegeneratePolar("polar quadric vanishes identically");
    return r;
}

struct PolarPullbackReport {
    bool singular_at_all_six = false;
    bool contains_node_lines = false;   // the 15 joins of reference points
    bool contains_cubic = false;        // the twisted cubic through them
    std::optional<Fq> weddle_scale;     // pullback = scale * quartic from the
                                        // determinantal construction, if so
};

// Pull the polar quadric at x = phi(p6) back along phi and compare with the
// determinantal quartic of (p1,...,p6).
inline PolarPullbackReport weddle_via_polar(const WeddleParams& p) {
    FieldSpec spec = p.spec();
    MultiPoly cubic = segre_equation(spec);
    PolyMap phi = phi_map(spec);
    std::vector<Fq> x = phi.apply(p.base_points()[5].coords());
    MultiPoly qx = polar_quadric(cubic, normalize_coords(std::move(x)));
    MultiPoly w = poly_pullback(qx, phi);
    PolarPullbackReport rep;
    if (w.is_zero() || w.degree() != 4) return rep;

    auto pts = p.base_points();
    rep.singular_at_all_six = true;
    for (const auto& pt : pts)
        if (!is_singular_at(w, pt.coords())) rep.singular_at_all_six = false;
    rep.contains_node_lines = true;
    for (const auto& l : node_lines(p))
        if (!line_on_surface(w, l)) rep.contains_node_lines = false;
    rep.contains_cubic = poly_pullback(w, twisted_cubic(p)).is_zero();
    rep.weddle_scale = proportional(w, weddle_equation(p));
    return rep;
}

// ---- the degree-two cover of P^4 --------------------------------------------

// q = y2y3 + y1y4 + y0(y0+y1+y2+y3+y4)
inline MultiPoly branch_quadric(FieldSpec spec) {
    auto V = [&](int i) { return MultiPoly::variable(spec, 5, i); };
    return V(2) * V(3) + V(1) * V(4) + V(0) * (V(0) + V(1) + V(2) + V(3) + V(4));
}

// w^2 + w*q + y0 y1 y4 (y0+y1+y2+y3+y4), with w as variable 5
inline MultiPoly cover_fourfold(FieldSpec spec) {
    auto V = [&](int i) { return MultiPoly::variable(spec, 6, i); };
    std::vector<MultiPoly> lift;
    for (int i = 0; i < 5; ++i) lift.push_back(V(i));
    MultiPoly q6 = branch_quadric(spec).substituted(lift);
    return V(5) * V(5) + V(5) * q6 + V(0) * V(1) * V(4) * (V(0) + V(1) + V(2) + V(3) + V(4));
}

struct CoverReport {
    bool deck_involution_fixes_equation = false;  // w -> w + q
    bool quadric_invariant = false;               // under all five generators
    bool all_ones_fixed = false;                  // (1,1,1,1,1) in the fixed space
    int smooth_quadric_points_f2 = 0;             // |V(q)(F2)| in P^4
};

inline CoverReport cover_checks(FieldSpec spec) {
    CoverReport rep;
    MultiPoly F = cover_fourfold(spec);
    MultiPoly q = branch_quadric(spec);
    // substitute w -> w + q (in 6 variables)
    std::vector<MultiPoly> sub;
    for (int i = 0; i < 5; ++i) sub.push_back(MultiPoly::variable(spec, 6, i));
    std::vector<MultiPoly> lift;
    for (int i = 0; i < 5; ++i) lift.push_back(MultiPoly::variable(spec, 6, i));
    sub.push_back(MultiPoly::variable(spec, 6, 5) + q.substituted(lift));
    rep.deck_involution_fixes_equation = (F.substituted(sub) == F);

    auto gens = rep222_generators();
    rep.quadric_invariant = true;
    for (const auto& g : gens)
        if (!preserves(q, g)) rep.quadric_invariant = false;
    for (const auto& v : fixed_space_f2(gens))
        if (v == std::array<uint8_t, 5>{1, 1, 1, 1, 1}) rep.all_ones_fixed = true;

    FieldSpec f2(1);
    for (const auto& pt : enumerate_proj_points(f2, 5))
        if (branch_quadric(f2).eval(pt.coords()).is_zero()) ++rep.smooth_quadric_points_f2;
    return rep;
}

// ---- equivariance probe ------------------------------------------------------

// Source-side chain of generators on P^3 matching the chain of adjacent
// transpositions on six letters: three coordinate transpositions, the linear
// involution fixing the coordinate frame and swapping the last frame point
// with the unit point, and the standard Cremona involution (denominators
// cleared, so its components are cubic).
inline std::vector<PolyMap> source_generators(FieldSpec spec) {
    auto V = [&](int i) { return MultiPoly::variable(spec, 4, i); };
    auto transpose = [&](int a, int b) {
        std::vector<MultiPoly> comps;
        for (int i = 0; i < 4; ++i) {
            int j = (i == a) ? b : (i == b) ? a : i;
            comps.push_back(V(j));
        }
        return PolyMap(4, std::move(comps));
    };
    std::vector<PolyMap> out;
    out.push_back(transpose(0, 1));
    out.push_back(transpose(1, 2));
    out.push_back(transpose(2, 3));
    out.push_back(PolyMap(4, {V(0) + V(3), V(1) + V(3), V(2) + V(3), V(3)}));
    {
        std::vector<MultiPoly> comps;
        for (int i = 0; i < 4; ++i) {
            MultiPoly prod = MultiPoly::constant(spec, 4, Fq::one(spec));
            for (int j = 0; j < 4; ++j)
                if (j != i) prod = prod * V(j);
            comps.push_back(std::move(prod));
        }
        out.push_back(PolyMap(4, std::move(comps)));
    }
    return out;
}

struct EquivarianceProbe {
    std::vector<uint8_t> generator_matches;  // one flag per generator pair
};

// Check phi . sigma = M . phi up to a common polynomial factor, pairing the
// source-side generators with the corresponding target-side ones.
inline EquivarianceProbe phi_equivariance_probe(FieldSpec spec) {
    auto src = source_generators(spec);
    PolyMap phi = phi_map(spec);
    auto tgt = rep33_generators();
    EquivarianceProbe probe;
    for (size_t k = 0; k < 5; ++k) {
        PolyMap lhs = compose(phi, src[k]);
        std::vector<MultiPoly> rhs;
        for (int i = 0; i < 5; ++i) {
            MultiPoly s(spec, 4);
            for (int j = 0; j < 5; ++j)
                if (tgt[k].m[i][j]) s = s + phi.components[j];
            rhs.push_back(std::move(s));
        }
        // common factor g with lhs_i = g * rhs_i for all i
        bool match = true;
        std::optional<MultiPoly> g;
        for (int i = 0; i < 5; ++i) {
            if (rhs[i].is_zero() != lhs.components[i].is_zero()) {
                match = false;
                break;
            }
            if (rhs[i].is_zero()) continue;
            auto qq = divide_exact(lhs.components[i], rhs[i]);
            if (!qq) {
                match = false;
                break;
            }
            if (!g)
                g = *qq;
            else if (!(*g == *qq)) {
                match = false;
                break;
            }
        }
        probe.generator_matches.push_back(uint8_t(match));
    }
    return probe;
}

}  // namespace k3k
