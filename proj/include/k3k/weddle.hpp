#pragma once

// The quartic determinantal surface attached to six general points of P^3 in
// characteristic 2: equation, seven singular points, curve inventory (twisted
// cubic, 15 node lines, 10 residual lines), the cubic Cremona involution, the
// (16_6) incidence, and the double-plane conic identities.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "k3k/configs.hpp"
#include "k3k/incidence.hpp"
#include "k3k/mvpoly.hpp"
#include "k3k/projgeom.hpp"
#include "k3k/rng.hpp"

namespace k3k {

struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};
struct VerificationFailure : std::runtime_error {
    explicit VerificationFailure(const std::string& what) : std::runtime_error(what) {}
};

// All points of P^(n-1)(F_q), normalized (first nonzero coordinate 1).
inline std::vector<ProjPoint> enumerate_proj_points(FieldSpec spec, int n) {
    std::vector<ProjPoint> out;
    uint64_t q = spec.order();
    for (int lead = 0; lead < n; ++lead) {
        int free = n - lead - 1;
        uint64_t count = 1;
        for (int i = 0; i < free; ++i) count *= q;
        for (uint64_t idx = 0; idx < count; ++idx) {
            FqVec v(n, Fq::zero(spec));
            v[lead] = Fq::one(spec);
            uint64_t rest = idx;
            for (int i = lead + 1; i < n; ++i) {
                v[i] = Fq(spec, rest % q);
                rest /= q;
            }
            out.emplace_back(std::move(v));
        }
    }
    return out;
}

struct WeddleParams {
    Fq a, b, c, d;

    WeddleParams(Fq a_, Fq b_, Fq c_, Fq d_) : a(a_), b(b_), c(c_), d(d_) {
        FieldSpec spec = a.spec();
        if (a.is_zero() || b.is_zero() || c.is_zero() || d.is_zero())
            throw GenericityError("parameters must be nonzero");
        if (!general_position6(base_points()))
            throw GenericityError("reference points not in general position");
        auto nodes = candidate_nodes();
        for (size_t i = 0; i < nodes.size(); ++i)
            for (size_t j = i + 1; j < nodes.size(); ++j)
                if (nodes[i] == nodes[j])
                    throw GenericityError("candidate singular points collide");
        (void)spec;
    }

    FieldSpec spec() const { return a.spec(); }

    // p1..p6: the coordinate frame, the unit point, and [a,b,c,d].
    std::vector<ProjPoint> base_points() const {
        FieldSpec s = spec();
        Fq z = Fq::zero(s), o = Fq::one(s);
        return {ProjPoint({o, z, z, z}), ProjPoint({z, o, z, z}), ProjPoint({z, z, o, z}),
                ProjPoint({z, z, z, o}), ProjPoint({o, o, o, o}), ProjPoint({a, b, c, d})};
    }

    // the six reference points plus the extra point of square roots
    std::vector<ProjPoint> candidate_nodes() const {
        auto pts = base_points();
        pts.push_back(ProjPoint({a.sqrt(), b.sqrt(), c.sqrt(), d.sqrt()}));
        return pts;
    }
};

// det of the 4x4 matrix with rows (a*yzw, x, 1, a), (b*xzw, y, 1, b), ...
inline MultiPoly weddle_equation(const WeddleParams& p) {
    FieldSpec s = p.spec();
    auto V = [&](int i) { return MultiPoly::variable(s, 4, i); };
    auto C = [&](Fq c) { return MultiPoly::constant(s, 4, c); };
    std::array<Fq, 4> par{p.a, p.b, p.c, p.d};
    std::vector<std::vector<MultiPoly>> m;
    for (int i = 0; i < 4; ++i) {
        MultiPoly prod = C(par[i]);
        for (int j = 0; j < 4; ++j)
            if (j != i) prod = prod * V(j);
        m.push_back({prod, V(i), C(Fq::one(s)), C(par[i])});
    }
    MultiPoly w = poly_det(m);
    if (w.is_zero() || !w.is_homogeneous() || w.degree() != 4)
        throw GenericityError("degenerate quartic");
    return w;
}

// p1..p6 plus [sqrt a, sqrt b, sqrt c, sqrt d]; all verified singular.
inline std::vector<ProjPoint> weddle_nodes(const WeddleParams& p) {
    MultiPoly w = weddle_equation(p);
    auto nodes = p.candidate_nodes();
    for (const auto& n : nodes)
        if (!is_singular_at(w, n.coords()))
            throw VerificationFailure("expected singular point fails: " + n.to_string());
    return nodes;
}

inline std::vector<ProjPoint> singular_points_bruteforce(const MultiPoly& f, FieldSpec spec) {
    std::vector<MultiPoly> parts;
    for (int i = 0; i < f.nvars(); ++i) parts.push_back(f.partial(i));
    std::vector<ProjPoint> out;
    for (auto& pt : enumerate_proj_points(spec, f.nvars())) {
        if (!f.eval(pt.coords()).is_zero()) continue;
        bool sing = true;
        for (const auto& g : parts)
            if (!g.eval(pt.coords()).is_zero()) {
                sing = false;
                break;
            }
        if (sing) out.push_back(pt);
    }
    return out;
}

// [x,y,z,w] -> [a*yzw, b*xzw, c*xyw, d*xyz]
inline PolyMap hutchinson_map(const WeddleParams& p) {
    FieldSpec s = p.spec();
    std::array<Fq, 4> par{p.a, p.b, p.c, p.d};
    std::vector<MultiPoly> comps;
    for (int i = 0; i < 4; ++i) {
        MultiPoly prod = MultiPoly::constant(s, 4, par[i]);
        for (int j = 0; j < 4; ++j)
            if (j != i) prod = prod * MultiPoly::variable(s, 4, j);
        comps.push_back(std::move(prod));
    }
    return PolyMap(4, std::move(comps));
}

// [s,t] -> [a(s+tb)(s+tc)(s+td), b(s+ta)(s+tc)(s+td), ...]
inline PolyMap twisted_cubic(const WeddleParams& p) {
    FieldSpec s = p.spec();
    std::array<Fq, 4> par{p.a, p.b, p.c, p.d};
    auto lin = [&](Fq c) {
        MultiPoly f(s, 2);
        f.add_term(Expo{1, 0}, Fq::one(s));
        f.add_term(Expo{0, 1}, c);
        return f;
    };
    std::vector<MultiPoly> comps;
    for (int i = 0; i < 4; ++i) {
        MultiPoly prod = MultiPoly::constant(s, 2, par[i]);
        for (int j = 0; j < 4; ++j)
            if (j != i) prod = prod * lin(par[j]);
        comps.push_back(std::move(prod));
    }
    return PolyMap(2, std::move(comps));
}

// the 15 lines through pairs of reference points, in duads6() order
inline std::vector<LineP3> node_lines(const WeddleParams& p) {
    auto pts = p.base_points();
    std::vector<LineP3> out;
    for (auto [i, j] : duads6()) out.push_back(line_through(pts[i - 1], pts[j - 1]));
    return out;
}

// Two independent linear forms cutting out a line.
inline std::vector<MultiPoly> line_dual_forms(const LineP3& l) {
    FieldSpec spec = l.p()[0].spec();
    FqMat m{l.p().coords(), l.q().coords()};
    auto basis = kernel(std::move(m), spec);
    std::vector<MultiPoly> forms;
    for (const auto& v : basis) {
        MultiPoly f(spec, 4);
        for (int i = 0; i < 4; ++i) {
            Expo e(4, 0);
            e[i] = 1;
            f.add_term(std::move(e), v[i]);
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

// Does the point lie on the image of a P^1-parametrized curve?
inline bool point_on_param_curve(const PolyMap& curve, const ProjPoint& pt) {
    FieldSpec spec = pt[0].spec();
    int n = curve.target_count();
    int d = curve.degree();
    std::vector<MultiPoly> forms;
    std::vector<int> degs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            forms.push_back(curve.components[i].scaled(pt[j]) +
                            curve.components[j].scaled(pt[i]));
            degs.push_back(d);
        }
    return binary_common_factor_degree(forms, degs) >= 1;
}

// Does a line meet a P^1-parametrized curve?
inline bool line_meets_param_curve(const PolyMap& curve, const LineP3& l) {
    auto forms4 = line_dual_forms(l);
    std::vector<MultiPoly> restricted;
    std::vector<int> degs;
    for (const auto& f : forms4) {
        restricted.push_back(poly_pullback(f, curve));
        degs.push_back(curve.degree());
    }
    return binary_common_factor_degree(restricted, degs) >= 1;
}

struct ResidualLine {
    Partition33 part;  // {i,j,k}|{l,m,n} over {1..6}
    LineP3 line;
};

// Linear parametrization of the plane through three of the reference points.
inline PolyMap plane_param(const WeddleParams& p, int i, int j, int k) {
    FieldSpec s = p.spec();
    auto pts = p.base_points();
    std::vector<MultiPoly> comps;
    for (int m = 0; m < 4; ++m) {
        MultiPoly f(s, 3);
        f.add_term(Expo{1, 0, 0}, pts[i - 1][m]);
        f.add_term(Expo{0, 1, 0}, pts[j - 1][m]);
        f.add_term(Expo{0, 0, 1}, pts[k - 1][m]);
        comps.push_back(std::move(f));
    }
    return PolyMap(3, std::move(comps));
}

// Residual lines as plane intersections, cross-checked against the
// plane-section factorization: the quartic restricted to the plane of
// p_i,p_j,p_k splits off the three coordinate node lines; the remaining
// linear factor must cut the same line.
inline std::vector<ResidualLine> residual_lines(const WeddleParams& p) {
    FieldSpec s = p.spec();
    MultiPoly w = weddle_equation(p);
    auto pts = p.base_points();
    std::vector<ResidualLine> out;
    for (const auto& part : partitions33()) {
        auto [i, j, k] = part.left;
        auto [l, m, n] = part.right;
        PlaneP3 h1 = plane_through(pts[i - 1], pts[j - 1], pts[k - 1]);
        PlaneP3 h2 = plane_through(pts[l - 1], pts[m - 1], pts[n - 1]);
        LineP3 line = planes_meet(h1, h2);
        if (!line_on_surface(w, line))
            throw VerificationFailure("residual line not on quartic: " + part.label());
        // factorization route in the plane of p_i,p_j,p_k: the node lines
        // l_jk, l_ik, l_ij become the coordinate forms u0, u1, u2
        PolyMap pm = plane_param(p, i, j, k);
        MultiPoly rest = poly_pullback(w, pm);
        MultiPoly quot = rest;
        for (int v = 0; v < 3; ++v) {
            auto q = divide_exact(quot, MultiPoly::variable(s, 3, v));
            if (!q) throw VerificationFailure("plane section not divisible: " + part.label());
            quot = *q;
        }
        if (quot.degree() != 1)
            throw VerificationFailure("unexpected residual factor degree: " + part.label());
        // the zero line of the quotient must map onto the plane intersection
        FqVec coef(3, Fq::zero(s));
        for (const auto& [e, cc] : quot.terms())
            for (int v = 0; v < 3; ++v)
                if (e[v] == 1) coef[v] = cc;
        FqMat km{coef};
        auto basis = kernel(std::move(km), s);
        if (basis.size() != 2)
            throw VerificationFailure("residual factor degenerate: " + part.label());
        for (const auto& u : basis) {
            ProjPoint img(pm.apply(u));
            if (!line.contains(img))
                throw VerificationFailure("factorization disagrees with plane intersection: " +
                                          part.label());
        }
        out.push_back({part, line});
    }
    return out;
}

// Geometric (16_6): A = {twisted cubic} + 15 node lines, B = 6 nodes + 10
// residual lines, with the same labels as the abstract configuration.
inline IncidenceStructure kummer_incidence(const WeddleParams& p) {
    MultiPoly w = weddle_equation(p);
    PolyMap r3 = twisted_cubic(p);
    auto pts = p.base_points();
    auto nlines = node_lines(p);
    auto rlines = residual_lines(p);
    auto duads = duads6();

    // inventory containment
    if (!poly_pullback(w, r3).is_zero())
        throw VerificationFailure("twisted cubic not on quartic");
    for (const auto& l : nlines)
        if (!line_on_surface(w, l)) throw VerificationFailure("node line not on quartic");

    std::vector<std::string> a_labels{"R"};
    for (auto [i, j] : duads)
        a_labels.push_back("l" + std::to_string(i) + std::to_string(j));
    std::vector<std::string> b_labels;
    for (int i = 1; i <= 6; ++i) b_labels.push_back("p" + std::to_string(i));
    for (const auto& rl : rlines) b_labels.push_back(rl.part.label());

    BitMatrix m(16, std::vector<uint8_t>(16, 0));
    for (int i = 0; i < 6; ++i)
        m[0][i] = uint8_t(point_on_param_curve(r3, pts[i]));
    for (size_t k = 0; k < rlines.size(); ++k)
        m[0][6 + k] = uint8_t(line_meets_param_curve(r3, rlines[k].line));
    for (size_t d = 0; d < nlines.size(); ++d) {
        for (int i = 0; i < 6; ++i) m[d + 1][i] = uint8_t(nlines[d].contains(pts[i]));
        for (size_t k = 0; k < rlines.size(); ++k)
            m[d + 1][6 + k] = uint8_t(lines_meet(nlines[d], rlines[k].line));
    }
    IncidenceStructure inc(std::move(a_labels), std::move(b_labels), std::move(m));
    if (!is_symmetric_config(inc, 6))
        throw VerificationFailure("geometric incidence is not a (16_6)");
    return inc;
}

struct HutchinsonOrbits {
    bool swaps_cubic_with_l56 = false;  // T maps the l56 parametrization onto the cubic
    int crossing_line_count = 0;        // residual lines separating 5 from 6
    int orbit_count = 0;                // pair orbits among them
    bool involution_on_lines = false;   // the induced permutation squares to identity
};

inline HutchinsonOrbits hutchinson_orbits(const WeddleParams& p) {
    FieldSpec s = p.spec();
    HutchinsonOrbits out;
    PolyMap t = hutchinson_map(p);
    PolyMap r3 = twisted_cubic(p);
    auto pts = p.base_points();

    // T composed with the parametrization s*p5 + t*(a,b,c,d) of the line p5 p6
    // (this scaling of the sixth point makes the match exact, not just up to
    // reparametrization)
    std::array<Fq, 4> par{p.a, p.b, p.c, p.d};
    std::vector<MultiPoly> l56comps;
    for (int i = 0; i < 4; ++i) {
        MultiPoly c(s, 2);
        c.add_term(Expo{1, 0}, Fq::one(s));
        c.add_term(Expo{0, 1}, par[size_t(i)]);
        l56comps.push_back(std::move(c));
    }
    PolyMap image = compose(t, PolyMap(2, std::move(l56comps)));
    bool swaps = true;
    std::optional<Fq> scale;
    for (int i = 0; i < 4; ++i) {
        const MultiPoly& a = image.components[i];
        const MultiPoly& b = r3.components[i];
        if (a.is_zero() != b.is_zero()) {
            swaps = false;
            break;
        }
        if (a.is_zero()) continue;
        auto c = proportional(a, b);
        if (!c || (scale && !(*scale == *c))) {
            swaps = false;
            break;
        }
        scale = *c;
    }
    out.swaps_cubic_with_l56 = swaps;

    // residual lines whose partition separates 5 from 6
    auto rlines = residual_lines(p);
    std::vector<int> crossing;
    for (size_t k = 0; k < rlines.size(); ++k)
        if (!rlines[k].part.triple_contains_pair(5, 6)) crossing.push_back(int(k));
    out.crossing_line_count = int(crossing.size());

    // image of each crossing line under T: strip the common quadratic factor,
    // the residue is a degree-1 parametrization of a line in the inventory
    std::map<int, int> perm;
    for (int k : crossing) {
        PolyMap img = compose(t, rlines[k].line.param());
        std::vector<int> degs(4, img.degree());
        MultiPoly g = binary_gcd(img.components, degs, s);
        if (g.is_zero() || g.degree() != img.degree() - 1)
            throw VerificationFailure("line image under the involution is not a line");
        std::vector<MultiPoly> lin;
        for (const auto& cmp : img.components) {
            if (cmp.is_zero()) {
                lin.push_back(MultiPoly::zero(s, 2));
                continue;
            }
            auto q = divide_exact(cmp, g);
            if (!q) throw VerificationFailure("common factor does not divide line image");
            lin.push_back(*q);
        }
        PolyMap linmap(2, lin);
        Fq one = Fq::one(s), zero = Fq::zero(s);
        ProjPoint u(linmap.apply({one, zero}));
        ProjPoint v(linmap.apply({zero, one}));
        LineP3 img_line = (u == v) ? LineP3(u, ProjPoint(linmap.apply({one, one})))
                                   : LineP3(u, v);
        int target = -1;
        for (size_t j = 0; j < rlines.size(); ++j)
            if (rlines[j].line == img_line) target = int(j);
        if (target < 0) throw VerificationFailure("involution image missing from inventory");
        perm[k] = target;
    }
    bool involution = true;
    std::set<std::set<int>> orbits;
    for (auto [k, tk] : perm) {
        if (!perm.count(tk) || perm[tk] != k) involution = false;
        orbits.insert(std::set<int>{k, tk});
    }
    out.involution_on_lines = involution;
    bool all_pairs = true;
    for (const auto& o : orbits)
        if (o.size() != 2) all_pairs = false;
    out.orbit_count = all_pairs && involution ? int(orbits.size()) : -1;
    return out;
}

// ---- double-plane model checks in the plane ----------------------------------

namespace detail {

inline FqVec cross3(const FqVec& u, const FqVec& v) {
    return {u[1] * v[2] + u[2] * v[1], u[0] * v[2] + u[2] * v[0], u[0] * v[1] + u[1] * v[0]};
}

inline FqVec veronese3(const FqVec& p) {
    return {p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
}

}  // namespace detail

struct DoublePlaneReport {
    int samples = 0;
    int disagreements = 0;
    int both_zero = 0;
};

// With l1=x, l2=y, l3=z, l4=x+y+z, l5=a1x+a2y+a3z, l6=b1x+b2y+b3z:
// D = 3x3 determinant for a conic through the six pairwise intersection
// points of {l1,l2,l3} and {l4,l5,l6}; E = 6x6 Veronese determinant of the
// six dual points. Checks D=0 <=> E=0 on random generic samples.
inline DoublePlaneReport double_plane_identity(FieldSpec spec, int samples, uint64_t seed) {
    Rng rng(seed);
    DoublePlaneReport rep;
    Fq z = Fq::zero(spec), o = Fq::one(spec);
    int attempts = 0;
    while (rep.samples < samples && attempts < samples * 20) {
        ++attempts;
        FqVec a{rng.element(spec), rng.element(spec), rng.element(spec)};
        FqVec b{rng.element(spec), rng.element(spec), rng.element(spec)};
        std::vector<FqVec> ls{{o, z, z}, {z, o, z}, {z, z, o}, {o, o, o}, a, b};
        // genericity: pairwise non-proportional, no three concurrent
        bool ok = true;
        std::vector<FqVec> normed;
        for (const auto& l : ls) {
            bool nonzero = false;
            for (const auto& cc : l) nonzero |= !cc.is_zero();
            if (!nonzero) {
                ok = false;
                break;
            }
            normed.push_back(normalize_coords(l));
        }
        if (ok)
            for (size_t i = 0; i < 6 && ok; ++i)
                for (size_t j = i + 1; j < 6; ++j)
                    if (normed[i] == normed[j]) ok = false;
        if (ok)
            for (int i = 0; i < 6 && ok; ++i)
                for (int j = i + 1; j < 6 && ok; ++j)
                    for (int k = j + 1; k < 6; ++k) {
                        FqMat mm{ls[i], ls[j], ls[k]};
                        if (det(std::move(mm), spec).is_zero()) {
                            ok = false;
                            break;
                        }
                    }
        if (!ok) continue;
        // D: conic c1*xy + c2*xz + c3*yz through P45, P46, P56
        auto row = [&](const FqVec& pt) {
            return FqVec{pt[0] * pt[1], pt[0] * pt[2], pt[1] * pt[2]};
        };
        FqMat dm{row(detail::cross3(ls[3], ls[4])), row(detail::cross3(ls[3], ls[5])),
                 row(detail::cross3(ls[4], ls[5]))};
        Fq D = det(std::move(dm), spec);
        FqMat em;
        for (const auto& l : ls) em.push_back(detail::veronese3(l));
        Fq E = det(std::move(em), spec);
        ++rep.samples;
        if (D.is_zero() != E.is_zero()) ++rep.disagreements;
        if (D.is_zero() && E.is_zero()) ++rep.both_zero;
    }
    return rep;
}

struct TenConicsReport {
    bool conics_fit = false;          // every conic passes its sixth point
    int common_point_count = -1;      // over the quadratic extension
    bool line_matches_dual = false;   // join of common points = dual of the strange point
    bool gradient_vanishes = false;   // dPhi = 0 at both common points
    bool off_branch_curve = false;    // Phi != 0 there
};

namespace detail {

// embedding of the base field into its quadratic extension, by sending the
// polynomial-basis generator to a root of the base modulus
class SubfieldEmbedding {
  public:
    SubfieldEmbedding(FieldSpec base, FieldSpec ext) : base_(base), ext_(ext) {
        uint64_t mod = base_.modulus();
        for (uint64_t x = 0; x < ext_.order(); ++x) {
            Fq xe(ext_, x);
            Fq acc = Fq::zero(ext_);
            Fq pw = Fq::one(ext_);
            for (int i = 0; i <= base_.degree(); ++i) {
                if ((mod >> i) & 1) acc = acc + pw;
                pw = pw * xe;
            }
            if (acc.is_zero()) {
                root_ = Fq(ext_, x);
                return;
            }
        }
        throw VerificationFailure("no embedding root found");
    }

    Fq operator()(const Fq& a) const {
        Fq acc = Fq::zero(ext_);
        Fq pw = Fq::one(ext_);
        for (int i = 0; i < base_.degree(); ++i) {
            if ((a.bits() >> i) & 1) acc = acc + pw;
            pw = pw * root_;
        }
        return acc;
    }

  private:
    FieldSpec base_, ext_;
    Fq root_ = Fq::zero(ext_);
};

// dense multiplication table for fast scans over small fields
class MulTable {
  public:
    explicit MulTable(FieldSpec spec) : q_(uint32_t(spec.order())), t_(size_t(q_) * q_) {
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = a; b < q_; ++b) {
                uint32_t v = (Fq(spec, a) * Fq(spec, b)).bits();
                t_[size_t(a) * q_ + b] = v;
                t_[size_t(b) * q_ + a] = v;
            }
    }
    uint32_t mul(uint32_t a, uint32_t b) const { return t_[size_t(a) * q_ + b]; }
    uint32_t q() const { return q_; }

  private:
    uint32_t q_;
    std::vector<uint32_t> t_;
};

}  // namespace detail

// One sample: six lines dual to six points of a random smooth conic (so the
// dual-conic condition holds by construction), over the given base field.
// The ten conics through six of the 15 pairwise intersection points are
// fitted exactly; their common points are found by exhaustive scan of the
// projective plane over the quadratic extension. Draws whose two common
// points would collide (inseparable restriction of the fitted conics to the
// dual line) are rejected and redrawn.
inline TenConicsReport ten_conics_sample(FieldSpec base, Rng& rng) {
    uint64_t q = base.order();
    Fq z = Fq::zero(base), o = Fq::one(base);
    TenConicsReport rep;

    std::vector<FqVec> ls;
    FqVec strange;
    std::vector<FqVec> conics;
    for (int attempt = 0; attempt < 400; ++attempt) {
        // random smooth conic in the dual plane; its strange point is
        // s = (c12, c02, c01) and smoothness means the conic misses it
        Fq c00 = rng.element(base), c11 = rng.element(base), c22 = rng.element(base);
        Fq c01 = rng.element(base), c02 = rng.element(base), c12 = rng.element(base);
        strange = {c12, c02, c01};
        if (strange[0].is_zero() && strange[1].is_zero() && strange[2].is_zero()) continue;
        auto conic = [&](const FqVec& p) {
            return c00 * p[0] * p[0] + c11 * p[1] * p[1] + c22 * p[2] * p[2] +
                   c01 * p[0] * p[1] + c02 * p[0] * p[2] + c12 * p[1] * p[2];
        };
        if (conic(strange).is_zero()) continue;
        std::vector<FqVec> pts;
        for (uint64_t y = 0; y < q; ++y)
            for (uint64_t zz = 0; zz < q; ++zz) {
                FqVec p{o, Fq(base, y), Fq(base, zz)};
                if (conic(p).is_zero()) pts.push_back(p);
            }
        for (uint64_t zz = 0; zz < q; ++zz) {
            FqVec p{z, o, Fq(base, zz)};
            if (conic(p).is_zero()) pts.push_back(p);
        }
        {
            FqVec p{z, z, o};
            if (conic(p).is_zero()) pts.push_back(p);
        }
        if (pts.size() < 6) continue;
        // pick six distinct points as the line duals
        std::vector<FqVec> chosen;
        std::set<size_t> used;
        int guard = 0;
        while (chosen.size() < 6 && guard++ < 200) {
            size_t i = size_t(rng.below(pts.size()));
            if (used.insert(i).second) chosen.push_back(pts[i]);
        }
        if (chosen.size() < 6) continue;
        bool ok = true;
        for (int i = 0; i < 6 && ok; ++i)
            for (int j = i + 1; j < 6 && ok; ++j)
                for (int k = j + 1; k < 6; ++k) {
                    FqMat mm{chosen[i], chosen[j], chosen[k]};
                    if (det(std::move(mm), base).is_zero()) {
                        ok = false;
                        break;
                    }
                }
        if (!ok) continue;

        // the 15 intersection points and the ten fitted conics
        std::map<std::pair<int, int>, FqVec> inter;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) inter[{i, j}] = detail::cross3(chosen[i], chosen[j]);
        auto pt = [&](int i, int j) { return inter[{std::min(i, j), std::max(i, j)}]; };

        std::vector<FqVec> fitted;
        bool fits = true;
        for (const auto& part : partitions33()) {
            std::array<int, 3> t1{part.left[0] - 1, part.left[1] - 1, part.left[2] - 1};
            std::array<int, 3> t2{part.right[0] - 1, part.right[1] - 1, part.right[2] - 1};
            std::vector<FqVec> six{pt(t1[0], t1[1]), pt(t1[0], t1[2]), pt(t1[1], t1[2]),
                                   pt(t2[0], t2[1]), pt(t2[0], t2[2]), pt(t2[1], t2[2])};
            FqMat sys;
            for (int i = 0; i < 5; ++i) sys.push_back(detail::veronese3(six[i]));
            auto basis = kernel(std::move(sys), base);
            if (basis.size() != 1) {
                fits = false;
                break;
            }
            FqVec co = basis[0];
            Fq val = z;
            FqVec v6 = detail::veronese3(six[5]);
            for (int k = 0; k < 6; ++k) val = val + co[k] * v6[k];
            if (!val.is_zero()) {
                fits = false;
                break;
            }
            fitted.push_back(co);
        }
        if (!fits || fitted.size() != 10) continue;

        // genericity: the first fitted conic must meet the dual line of the
        // strange point in two distinct points (separable restriction)
        FqMat sm{strange};
        auto span = kernel(std::move(sm), base);
        auto conic_eval = [&](const FqVec& co, const FqVec& p) {
            FqVec v = detail::veronese3(p);
            Fq acc = z;
            for (int k = 0; k < 6; ++k) acc = acc + co[k] * v[k];
            return acc;
        };
        Fq cs = conic_eval(fitted[0], span[0]);
        Fq ct = conic_eval(fitted[0], span[1]);
        FqVec mid(3, z);
        for (int i = 0; i < 3; ++i) mid[i] = span[0][i] + span[1][i];
        Fq cst = conic_eval(fitted[0], mid) + cs + ct;
        if (cst.is_zero()) continue;

        ls = chosen;
        conics = std::move(fitted);
        break;
    }
    if (conics.size() != 10) return rep;
    rep.conics_fit = true;

    // scan the plane over the quadratic extension for common zeros
    FieldSpec ext(base.degree() * 2);
    detail::SubfieldEmbedding emb(base, ext);
    detail::MulTable mt(ext);
    uint32_t Q = mt.q();
    std::vector<std::array<uint32_t, 6>> ec;
    for (const auto& co : conics) {
        std::array<uint32_t, 6> e{};
        for (int k = 0; k < 6; ++k) e[k] = emb(co[k]).bits();
        ec.push_back(e);
    }
    std::vector<std::array<uint32_t, 3>> common;
    auto test_point = [&](uint32_t x, uint32_t y, uint32_t zz) {
        std::array<uint32_t, 6> v{mt.mul(x, x), mt.mul(y, y),  mt.mul(zz, zz),
                                  mt.mul(x, y), mt.mul(x, zz), mt.mul(y, zz)};
        for (const auto& co : ec) {
            uint32_t t = 0;
            for (int k = 0; k < 6; ++k) t ^= mt.mul(co[k], v[k]);
            if (t) return;
        }
        common.push_back({x, y, zz});
    };
    for (uint32_t y = 0; y < Q; ++y)
        for (uint32_t zz = 0; zz < Q; ++zz) test_point(1, y, zz);
    for (uint32_t zz = 0; zz < Q; ++zz) test_point(0, 1, zz);
    test_point(0, 0, 1);
    rep.common_point_count = int(common.size());
    if (common.size() != 2) return rep;

    // join of the two common points vs the strange point of the dual conic
    FqVec cp0{Fq(ext, common[0][0]), Fq(ext, common[0][1]), Fq(ext, common[0][2])};
    FqVec cp1{Fq(ext, common[1][0]), Fq(ext, common[1][1]), Fq(ext, common[1][2])};
    FqVec join = normalize_coords(detail::cross3(cp0, cp1));
    FqVec es{emb(strange[0]), emb(strange[1]), emb(strange[2])};
    rep.line_matches_dual = (join == normalize_coords(es));

    // gradient of Phi = l1...l6 at the common points, and Phi itself
    std::vector<FqVec> els;
    for (const auto& l : ls) els.push_back({emb(l[0]), emb(l[1]), emb(l[2])});
    rep.gradient_vanishes = true;
    rep.off_branch_curve = true;
    for (const auto& cp : {cp0, cp1}) {
        std::vector<Fq> lv;
        for (const auto& l : els) lv.push_back(l[0] * cp[0] + l[1] * cp[1] + l[2] * cp[2]);
        Fq phi = Fq::one(ext);
        for (const auto& v : lv) phi = phi * v;
        if (phi.is_zero()) rep.off_branch_curve = false;
        for (int j = 0; j < 3; ++j) {
            Fq partial = Fq::zero(ext);
            for (int i = 0; i < 6; ++i) {
                Fq pr = els[i][j];
                for (int k = 0; k < 6; ++k)
                    if (k != i) pr = pr * lv[k];
                partial = partial + pr;
            }
            if (!partial.is_zero()) rep.gradient_vanishes = false;
        }
    }
    return rep;
}

}  // namespace k3k
