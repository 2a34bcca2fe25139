#pragma once

// An order-2/class-2 line congruence in P^3 over GF(2^k): the del Pezzo
// surface cut on the Grassmannian quadric by a quadric and a hyperplane in
// Plücker coordinates, ray counts through points and in planes, the tangency
// form, Artin-Schreier cover normal forms, and the sixteen-points/sixteen-
// conics configuration carried by its lines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3k/incidence.hpp"
#include "k3k/projgeom.hpp"
#include "k3k/rng.hpp"
#include "k3k/weddle.hpp"

namespace k3k {

struct NotALine : std::runtime_error {
    explicit NotALine(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateF2 : std::runtime_error {
    explicit DegenerateF2(const std::string& what) : std::runtime_error(what) {}
};
struct InconclusiveSample : std::runtime_error {
    explicit InconclusiveSample(const std::string& what) : std::runtime_error(what) {}
};

// Plücker key (x1,x2,x3,y1,y2,y3) = (p01,p02,p03,p23,p13,p12) of a line.
inline FqVec pluecker_of_line(const LineP3& l) { return l.pluecker(); }

inline bool on_grassmannian(const FqVec& k) {
    return (k[0] * k[3] + k[1] * k[4] + k[2] * k[5]).is_zero();
}

// Reconstruct the line from its key: the key fills the symmetric matrix
// M_ij = p_ij, whose nonzero columns span the line.
inline LineP3 line_of_pluecker(const FqVec& key, FieldSpec spec) {
    if (key.size() != 6) throw NotALine("key needs six coordinates");
    if (!on_grassmannian(key)) throw NotALine("key off the Grassmannian quadric");
    Fq z = Fq::zero(spec);
    // rows/cols 0..3; entries from (p01,p02,p03,p23,p13,p12)
    std::vector<FqVec> m(4, FqVec(4, z));
    m[0][1] = m[1][0] = key[0];
    m[0][2] = m[2][0] = key[1];
    m[0][3] = m[3][0] = key[2];
    m[2][3] = m[3][2] = key[3];
    m[1][3] = m[3][1] = key[4];
    m[1][2] = m[2][1] = key[5];
    std::optional<ProjPoint> u;
    for (int j = 0; j < 4; ++j) {
        FqVec col{m[0][j], m[1][j], m[2][j], m[3][j]};
        bool nz = false;
        for (const auto& c : col) nz |= !c.is_zero();
        if (!nz) continue;
        ProjPoint p(std::move(col));
        if (!u) {
            u = p;
        } else if (!(*u == p)) {
            LineP3 l(*u, p);
            if (!(normalize_coords(key) == l.pluecker()))
                throw NotALine("matrix columns do not reproduce the key");
            return l;
        }
    }
    throw NotALine("key matrix has rank below two");
}

struct CongruenceParams {
    Fq a1, a2, a3, c1, c2, c3;
    Fq al1, al2, al3, be1, be2, be3;

    CongruenceParams(std::vector<Fq> v)
        : a1(v.at(0)), a2(v.at(1)), a3(v.at(2)), c1(v.at(3)), c2(v.at(4)), c3(v.at(5)),
          al1(v.at(6)), al2(v.at(7)), al3(v.at(8)), be1(v.at(9)), be2(v.at(10)),
          be3(v.at(11)) {
        if (v.size() != 12) throw GenericityError("twelve parameters expected");
        if (a1 == a2 || a1 == a3 || a2 == a3)
            throw GenericityError("quadric coefficients a_i must be pairwise distinct");
    }

    FieldSpec spec() const { return a1.spec(); }

    static CongruenceParams from_bits(FieldSpec spec, const std::vector<uint64_t>& bits) {
        std::vector<Fq> v;
        for (uint64_t b : bits) v.emplace_back(spec, b);
        return CongruenceParams(std::move(v));
    }

    // a1 x1 y1 + a2 x2 y2 + a3 x3 y3 + c1 y1^2 + c2 y2^2 + c3 y3^2
    Fq quadric_at(const FqVec& k) const {
        return a1 * k[0] * k[3] + a2 * k[1] * k[4] + a3 * k[2] * k[5] + c1 * k[3] * k[3] +
               c2 * k[4] * k[4] + c3 * k[5] * k[5];
    }
    // alpha1 x1 + alpha2 x2 + alpha3 x3 + beta1 y1 + beta2 y2 + beta3 y3
    Fq hyperplane_at(const FqVec& k) const {
        return al1 * k[0] + al2 * k[1] + al3 * k[2] + be1 * k[3] + be2 * k[4] + be3 * k[5];
    }
};

// (a1+a3)(alpha2 x0x2 + beta2 x1x3) + (a2+a3)(alpha1 x0x1 + beta1 x2x3)
//   + (a1+a2)(alpha3 x0x3 + beta3 x1x2)
inline MultiPoly f2_from_params(const CongruenceParams& p) {
    FieldSpec s = p.spec();
    MultiPoly f(s, 4);
    auto add = [&](int i, int j, Fq c) {
        Expo e(4, 0);
        e[i] += 1;
        e[j] += 1;
        f.add_term(std::move(e), c);
    };
    add(0, 2, (p.a1 + p.a3) * p.al2);
    add(1, 3, (p.a1 + p.a3) * p.be2);
    add(0, 1, (p.a2 + p.a3) * p.al1);
    add(2, 3, (p.a2 + p.a3) * p.be1);
    add(0, 3, (p.a1 + p.a2) * p.al3);
    add(1, 2, (p.a1 + p.a2) * p.be3);
    if (f.is_zero()) throw DegenerateF2("quadric vanishes identically");
    return f;
}

struct CongruenceSurface {
    CongruenceParams params;
    std::vector<FqVec> points;  // normalized Plücker keys

    bool contains_key(const FqVec& k) const {
        FqVec n = normalize_coords(k);
        return std::binary_search(points.begin(), points.end(), n, KeyLess{});
    }

    struct KeyLess {
        bool operator()(const FqVec& a, const FqVec& b) const {
            for (size_t i = 0; i < a.size(); ++i) {
                if (!(a[i] == b[i])) return a[i].bits() < b[i].bits();
            }
            return false;
        }
    };
};

// All lines of P^3(F_q), enumerated as reduced 2x4 row pairs: pivot columns
// i<j, first row free after i except at j, second row free after j.
template <typename F>
inline void for_each_line_key(FieldSpec spec, F&& fn) {
    uint64_t q = spec.order();
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            std::vector<int> free1, free2;
            for (int c = i + 1; c < 4; ++c)
                if (c != j) free1.push_back(c);
            for (int c = j + 1; c < 4; ++c) free2.push_back(c);
            uint64_t n1 = 1, n2 = 1;
            for (size_t t = 0; t < free1.size(); ++t) n1 *= q;
            for (size_t t = 0; t < free2.size(); ++t) n2 *= q;
            for (uint64_t u = 0; u < n1; ++u)
                for (uint64_t v = 0; v < n2; ++v) {
                    FqVec r1(4, Fq::zero(spec)), r2(4, Fq::zero(spec));
                    r1[i] = Fq::one(spec);
                    r2[j] = Fq::one(spec);
                    uint64_t uu = u;
                    for (int c : free1) {
                        r1[c] = Fq(spec, uu % q);
                        uu /= q;
                    }
                    uint64_t vv = v;
                    for (int c : free2) {
                        r2[c] = Fq(spec, vv % q);
                        vv /= q;
                    }
                    fn(r1, r2, pluecker_key_raw(r1, r2));
                }
        }
}

// Scan all lines, keep those on the quadric and the hyperplane; verify
// smoothness of the sampled surface by Jacobian rank at a few points.
inline CongruenceSurface congruence_points(const CongruenceParams& p) {
    FieldSpec spec = p.spec();
    CongruenceSurface s{p, {}};
    for_each_line_key(spec, [&](const FqVec&, const FqVec&, const FqVec& key) {
        if (!p.quadric_at(key).is_zero()) return;
        if (!p.hyperplane_at(key).is_zero()) return;
        s.points.push_back(normalize_coords(key));
    });
    std::sort(s.points.begin(), s.points.end(), CongruenceSurface::KeyLess{});

    // Jacobian of (Grassmannian, quadric, hyperplane) at sampled points
    size_t checked = 0;
    for (size_t i = 0; i < s.points.size() && checked < 25; i += 13, ++checked) {
        const FqVec& k = s.points[i];
        FqVec gG{k[3], k[4], k[5], k[0], k[1], k[2]};
        FqVec gS{p.a1 * k[3], p.a2 * k[4], p.a3 * k[5],
                 p.a1 * k[0], p.a2 * k[1], p.a3 * k[2]};
        FqVec gH{p.al1, p.al2, p.al3, p.be1, p.be2, p.be3};
        FqMat m{gG, gS, gH};
        if (rank(std::move(m)) != 3)
            throw GenericityError("sampled surface point is not smooth");
    }
    return s;
}

// ---- ray counts --------------------------------------------------------------

enum class PencilOutcome { separable, inseparable, degenerate_h, degenerate_s };

struct PencilRestriction {
    PencilOutcome outcome;
    FqVec du, dv;       // directions spanning the hyperplane pencil (if found)
    Fq cs, cst, ct;     // restricted quadric s^2, st, t^2 coefficients
};

namespace detail {

// Shared core of the two ray counts: fix a generator vector g in P^3 (a point
// for the order, a plane for the class), a key map joining g with any second
// vector, and count congruence members in the induced pencil.
template <typename KeyFn>
inline PencilRestriction pencil_restriction(const CongruenceParams& p, const FqVec& g,
                                            KeyFn&& key_of) {
    FieldSpec spec = p.spec();
    Fq z = Fq::zero(spec);
    PencilRestriction out{PencilOutcome::degenerate_h, {}, {}, z, z, z};
    int lead = 0;
    while (g[lead].is_zero()) ++lead;
    std::vector<FqVec> basis;
    for (int i = 0; i < 4; ++i) {
        if (i == lead) continue;
        FqVec e(4, z);
        e[i] = Fq::one(spec);
        basis.push_back(std::move(e));
    }
    FqVec h(3, z);
    for (int j = 0; j < 3; ++j) h[j] = p.hyperplane_at(key_of(g, basis[j]));
    FqMat hm{h};
    auto ker = kernel(std::move(hm), spec);
    if (ker.size() != 2) return out;  // whole plane inside the hyperplane
    auto lift = [&](const FqVec& lam) {
        FqVec d(4, z);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 4; ++i) d[i] = d[i] + lam[j] * basis[j][i];
        return d;
    };
    out.du = lift(ker[0]);
    out.dv = lift(ker[1]);
    out.cs = p.quadric_at(key_of(g, out.du));
    out.ct = p.quadric_at(key_of(g, out.dv));
    FqVec sum(4, z);
    for (int i = 0; i < 4; ++i) sum[i] = out.du[i] + out.dv[i];
    out.cst = p.quadric_at(key_of(g, sum)) + out.cs + out.ct;
    if (out.cs.is_zero() && out.cst.is_zero() && out.ct.is_zero()) {
        out.outcome = PencilOutcome::degenerate_s;
    } else {
        out.outcome = out.cst.is_zero() ? PencilOutcome::inseparable
                                        : PencilOutcome::separable;
    }
    return out;
}

// dual key: complementary minors of a plane pair, reordered back to the
// line-key convention
inline FqVec dual_key(const FqVec& n, const FqVec& m) {
    FqVec raw = pluecker_key_raw(n, m);
    return {raw[3], raw[4], raw[5], raw[0], raw[1], raw[2]};
}

}  // namespace detail

inline PencilRestriction order_pencil(const CongruenceSurface& s, const ProjPoint& x) {
    return detail::pencil_restriction(
        s.params, x.coords(),
        [](const FqVec& a, const FqVec& b) { return pluecker_key_raw(a, b); });
}

inline PencilRestriction class_pencil(const CongruenceSurface& s, const PlaneP3& pl) {
    return detail::pencil_restriction(
        s.params, pl.coeffs(),
        [](const FqVec& a, const FqVec& b) { return detail::dual_key(a, b); });
}

// true: exactly two distinct rays through x; nullopt: resample (degenerate)
inline std::optional<bool> order_check(const CongruenceSurface& s, const ProjPoint& x) {
    PencilRestriction r = order_pencil(s, x);
    if (r.outcome == PencilOutcome::degenerate_h || r.outcome == PencilOutcome::degenerate_s)
        return std::nullopt;
    return r.outcome == PencilOutcome::separable;
}

inline std::optional<bool> class_check(const CongruenceSurface& s, const PlaneP3& pl) {
    PencilRestriction r = class_pencil(s, pl);
    if (r.outcome == PencilOutcome::degenerate_h || r.outcome == PencilOutcome::degenerate_s)
        return std::nullopt;
    return r.outcome == PencilOutcome::separable;
}

// ---- tangency ----------------------------------------------------------------

// Polar bilinear form of a quadric in P^3: alternating in characteristic 2,
// hence a linear form in the Plücker variables (z0..z5 keyed like a line key).
// A line is tangent to the quadric iff this form kills its key.
inline MultiPoly tangency_form(const MultiPoly& f2) {
    FieldSpec spec = f2.spec();
    MultiPoly out(spec, 6);
    // cross coefficients c_ij of x_i x_j, mapped to the key slot of p_ij
    auto slot = [](int i, int j) {
        if (i == 0 && j == 1) return 0;
        if (i == 0 && j == 2) return 1;
        if (i == 0 && j == 3) return 2;
        if (i == 2 && j == 3) return 3;
        if (i == 1 && j == 3) return 4;
        return 5;  // (1,2)
    };
    for (const auto& [e, c] : f2.terms()) {
        int i = -1, j = -1;
        for (int v = 0; v < 4; ++v) {
            if (e[v] == 1) (i < 0 ? i : j) = v;
            if (e[v] == 2) i = j = v;
        }
        if (i == j || i < 0 || j < 0) continue;  // squares drop out of the polar
        Expo ee(6, 0);
        ee[slot(i, j)] = 1;
        out.add_term(std::move(ee), c);
    }
    if (out.is_zero()) throw DegenerateF2("polar form vanishes identically");
    return out;
}

// ---- cover equations ---------------------------------------------------------

struct WeightedHypersurface {
    std::vector<int> weights;
    MultiPoly equation;

    std::string to_string() const {
        std::string s = "weights";
        for (int w : weights) s += " " + std::to_string(w);
        return s + "; " + equation.to_string();
    }
};

// x4^2 + F2 x4 + F4 in P(1,1,1,1,2), variable 4 of weight 2
inline WeightedHypersurface cover_equation(const MultiPoly& f2, const MultiPoly& f4) {
    if (f2.degree() != 2 || f4.degree() != 4)
        throw ArityMismatch("cover needs a quadric and a quartic");
    FieldSpec spec = f2.spec();
    std::vector<MultiPoly> lift;
    for (int i = 0; i < 4; ++i) lift.push_back(MultiPoly::variable(spec, 5, i));
    MultiPoly w = MultiPoly::variable(spec, 5, 4);
    MultiPoly eq = w * w + f2.substituted(lift) * w + f4.substituted(lift);
    return {{1, 1, 1, 1, 2}, eq};
}

// x3^2 + F3 x3 + F6 in P(1,1,1,3), variable 3 of weight 3
inline WeightedHypersurface sextic_cover(const MultiPoly& f3, const MultiPoly& f6) {
    if (f6.degree() != 6 || (!f3.is_zero() && f3.degree() != 3))
        throw ArityMismatch("cover needs a cubic and a sextic");
    FieldSpec spec = f6.spec();
    std::vector<MultiPoly> lift;
    for (int i = 0; i < 3; ++i) lift.push_back(MultiPoly::variable(spec, 4, i));
    MultiPoly w = MultiPoly::variable(spec, 4, 3);
    MultiPoly eq = w * w + f3.substituted(lift) * w + f6.substituted(lift);
    return {{1, 1, 1, 3}, eq};
}

namespace detail {

inline std::vector<Expo> monomials_of_degree(int nvars, int d) {
    std::vector<Expo> out;
    Expo e(nvars, 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == nvars - 1) {
            e[i] = uint16_t(rem);
            out.push_back(e);
            return;
        }
        for (int v = rem; v >= 0; --v) {
            e[i] = uint16_t(v);
            rec(i + 1, rem - v);
        }
    };
    rec(0, d);
    // grevlex-descending, matching the term order used everywhere else
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

inline std::vector<uint8_t> quartic_bits(const MultiPoly& f, const std::vector<Expo>& mons,
                                         int m) {
    std::vector<uint8_t> v(mons.size() * size_t(m), 0);
    for (size_t t = 0; t < mons.size(); ++t) {
        auto it = f.terms().find(mons[t]);
        if (it == f.terms().end()) continue;
        for (int b = 0; b < m; ++b) v[t * m + b] = uint8_t((it->second.bits() >> b) & 1);
    }
    return v;
}

}  // namespace detail

// Canonical representative of F4 modulo the additive image of A -> A^2 + A*F2
// over quadrics A: triangularize that F2-linear map on quartic coefficient
// bits (monomials in the shared term order) and clear every pivot position.
inline MultiPoly normalize_quartic(const MultiPoly& f4, const MultiPoly& f2) {
    FieldSpec spec = f2.spec();
    const int m = spec.degree();
    auto qmons = detail::monomials_of_degree(4, 4);
    auto amons = detail::monomials_of_degree(4, 2);
    // images of the F2-basis of quadrics
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& am : amons)
        for (int b = 0; b < m; ++b) {
            MultiPoly a = MultiPoly::monomial(spec, am, Fq(spec, uint64_t(1) << b));
            MultiPoly img = a * a + a * f2;
            rows.push_back(detail::quartic_bits(img, qmons, m));
        }
    // row echelon with pivot positions in coordinate order
    size_t ncols = qmons.size() * size_t(m);
    std::vector<size_t> pivot_of_row;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t pr = r;
        while (pr < rows.size() && !rows[pr][c]) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        for (size_t rr = 0; rr < rows.size(); ++rr)
            if (rr != r && rows[rr][c])
                for (size_t cc = 0; cc < ncols; ++cc) rows[rr][cc] ^= rows[r][cc];
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<uint8_t> v = detail::quartic_bits(f4, qmons, m);
    for (size_t i = 0; i < pivot_of_row.size(); ++i)
        if (v[pivot_of_row[i]])
            for (size_t cc = 0; cc < ncols; ++cc) v[cc] ^= rows[i][cc];
    MultiPoly out(spec, 4);
    for (size_t t = 0; t < qmons.size(); ++t) {
        uint64_t bits = 0;
        for (int b = 0; b < m; ++b)
            if (v[t * m + b]) bits |= uint64_t(1) << b;
        out.add_term(qmons[t], Fq(spec, bits));
    }
    return out;
}

// ---- the configuration on the quadric ---------------------------------------

struct QuadricKummer {
    IncidenceStructure incidence;          // conic rows vs vertex columns
    std::vector<ProjPoint> vertices;       // pencil vertices, one per line of S
    std::vector<PlaneP3> planes;           // pencil planes cutting the conics
    bool vertices_on_quadric = false;      // all on V(F2)
};

// Find the 16 lines of the sampled surface in P^5 by a collinear scan, take
// each pencil's vertex and plane, and build the point/conic incidence.
inline QuadricKummer kummer_on_quadric(const CongruenceSurface& s) {
    FieldSpec spec = s.params.spec();
    uint64_t q = spec.order();
    const auto& pts = s.points;
    // collinear scan: the full P^5 line through a pair must stay inside S
    std::set<std::vector<std::vector<uint32_t>>> seen;
    std::vector<std::pair<FqVec, FqVec>> lines;
    for (size_t i = 0; i < pts.size(); ++i) {
        for (size_t j = i + 1; j < pts.size(); ++j) {
            std::vector<std::vector<uint32_t>> members;
            bool inside = true;
            for (uint64_t t = 0; t <= q && inside; ++t) {
                FqVec p(6, Fq::zero(spec));
                if (t == q) {
                    p = pts[j];
                } else {
                    Fq tt(spec, t);
                    for (int c = 0; c < 6; ++c) p[c] = pts[i][c] + tt * pts[j][c];
                }
                FqVec n = normalize_coords(std::move(p));
                if (!s.contains_key(n)) {
                    inside = false;
                    break;
                }
                std::vector<uint32_t> bits;
                for (const auto& cc : n) bits.push_back(cc.bits());
                members.push_back(std::move(bits));
            }
            if (!inside) continue;
            std::sort(members.begin(), members.end());
            if (seen.insert(members).second) lines.emplace_back(pts[i], pts[j]);
        }
    }
    if (lines.size() != 16)
        throw InconclusiveSample("expected 16 rational lines, found " +
                                 std::to_string(lines.size()));

    MultiPoly f2 = f2_from_params(s.params);
    std::vector<ProjPoint> vertices;
    std::vector<PlaneP3> planes;
    for (const auto& [k1, k2] : lines) {
        LineP3 r1 = line_of_pluecker(k1, spec);
        LineP3 r2 = line_of_pluecker(k2, spec);
        // vertex: common solution of all four dual forms
        FqMat dm;
        for (const auto& f : line_dual_forms(r1)) {
            FqVec row(4, Fq::zero(spec));
            for (const auto& [e, c] : f.terms())
                for (int v = 0; v < 4; ++v)
                    if (e[v] == 1) row[v] = c;
            dm.push_back(std::move(row));
        }
        for (const auto& f : line_dual_forms(r2)) {
            FqVec row(4, Fq::zero(spec));
            for (const auto& [e, c] : f.terms())
                for (int v = 0; v < 4; ++v)
                    if (e[v] == 1) row[v] = c;
            dm.push_back(std::move(row));
        }
        auto vk = kernel(std::move(dm), spec);
        if (vk.size() != 1) throw InconclusiveSample("pencil rays have no common point");
        vertices.emplace_back(vk[0]);
        // plane: the span of the two rays
        FqMat sm{r1.p().coords(), r1.q().coords(), r2.p().coords(), r2.q().coords()};
        auto nk = kernel(std::move(sm), spec);
        if (nk.size() != 1) throw InconclusiveSample("pencil rays span no plane");
        MultiPoly form(spec, 4);
        for (int v = 0; v < 4; ++v) {
            Expo e(4, 0);
            e[v] = 1;
            form.add_term(std::move(e), nk[0][v]);
        }
        planes.emplace_back(std::move(form));
    }
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (vertices[i] == vertices[j])
                throw InconclusiveSample("pencil vertices collide");

    bool on_q = true;
    for (const auto& v : vertices)
        if (!f2.eval(v.coords()).is_zero()) on_q = false;

    std::vector<std::string> a_labels, b_labels;
    for (int i = 1; i <= 16; ++i) {
        a_labels.push_back("T" + std::to_string(i));
        b_labels.push_back("x" + std::to_string(i));
    }
    BitMatrix m(16, std::vector<uint8_t>(16, 0));
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) m[i][j] = uint8_t(planes[i].contains(vertices[j]));
    IncidenceStructure inc(std::move(a_labels), std::move(b_labels), std::move(m));
    if (!is_symmetric_config(inc, 6))
        throw InconclusiveSample("point/conic incidence is not a (16_6)");
    return {std::move(inc), std::move(vertices), std::move(planes), on_q};
}

// A parameter set over GF(2^4) whose sixteen lines are all rational.
inline CongruenceParams good_params_gf16() {
    FieldSpec spec(4);
    return CongruenceParams::from_bits(spec, {15, 11, 9, 0, 3, 1, 5, 7, 14, 9, 13, 12});
}

// Randomized search for a parameter set with sixteen rational lines.
inline std::pair<CongruenceParams, QuadricKummer> find_kummer_params(FieldSpec spec,
                                                                     uint64_t seed,
                                                                     int max_trials = 200) {
    Rng rng(seed);
    for (int t = 0; t < max_trials; ++t) {
        std::vector<Fq> v;
        for (int i = 0; i < 12; ++i) v.push_back(rng.element(spec));
        try {
            CongruenceParams p(v);
            CongruenceSurface s = congruence_points(p);
            QuadricKummer k = kummer_on_quadric(s);
            return {p, std::move(k)};
        } catch (const GenericityError&) {
        } catch (const InconclusiveSample&) {
        } catch (const DegenerateF2&) {
        } catch (const NotALine&) {
        }
    }
    throw InconclusiveSample("no sixteen-rational-line parameter set within the trial cap");
}

}  // namespace k3k
