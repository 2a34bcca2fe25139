#pragma once

// Projective points, lines, and planes in P^3 over GF(2^k).
// Lines carry a canonical Plücker key ordered (x1,x2,x3,y1,y2,y3) =
// (p01,p02,p03,p23,p13,p12), so the Grassmannian relation reads
// x1*y1 + x2*y2 + x3*y3 = 0.

#include <array>
#include <sstream>
#include <string>
#include <vector>

#include "k3k/linalg.hpp"
#include "k3k/mvpoly.hpp"

namespace k3k {

struct GeometryError : std::runtime_error {
    explicit GeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Scale a homogeneous tuple so its first nonzero entry is 1.
inline FqVec normalize_coords(FqVec v) {
    for (const Fq& c : v) {
        if (!c.is_zero()) {
            Fq inv = c.inv();
            for (Fq& x : v) x = x * inv;
            return v;
        }
    }
    throw GeometryError("zero tuple has no projective normalization");
}

class ProjPoint {
  public:
    explicit ProjPoint(FqVec coords) : coords_(normalize_coords(std::move(coords))) {}

    const FqVec& coords() const { return coords_; }
    size_t dim() const { return coords_.size(); }  // ambient coordinate count
    const Fq& operator[](size_t i) const { return coords_[i]; }

    bool operator==(const ProjPoint& o) const { return coords_ == o.coords_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ":";
            os << coords_[i].to_hex();
        }
        os << "]";
        return os.str();
    }

  private:
    FqVec coords_;
};

// Plücker key of the line through u,v (both length 4): p_ij = u_i v_j + u_j v_i.
inline FqVec pluecker_key_raw(const FqVec& u, const FqVec& v) {
    auto p = [&](int i, int j) { return u[i] * v[j] + u[j] * v[i]; };
    return {p(0, 1), p(0, 2), p(0, 3), p(2, 3), p(1, 3), p(1, 2)};
}

class LineP3 {
  public:
    LineP3(ProjPoint p, ProjPoint q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_.dim() != 4 || q_.dim() != 4) throw GeometryError("line needs points in P^3");
        if (p_ == q_) throw GeometryError("line through equal points");
        key_ = normalize_coords(pluecker_key_raw(p_.coords(), q_.coords()));
    }

    const ProjPoint& p() const { return p_; }
    const ProjPoint& q() const { return q_; }
    const FqVec& pluecker() const { return key_; }

    // Degree-1 parametrization [s,t] -> s*p + t*q.
    PolyMap param() const {
        FieldSpec spec = p_[0].spec();
        std::vector<MultiPoly> comps;
        for (int i = 0; i < 4; ++i) {
            MultiPoly c(spec, 2);
            c.add_term(Expo{1, 0}, p_[i]);
            c.add_term(Expo{0, 1}, q_[i]);
            comps.push_back(std::move(c));
        }
        return PolyMap(2, std::move(comps));
    }

    ProjPoint at(const Fq& s, const Fq& t) const {
        FqVec v(4, Fq::zero(s.spec()));
        for (int i = 0; i < 4; ++i) v[i] = s * p_[i] + t * q_[i];
        return ProjPoint(std::move(v));
    }

    bool contains(const ProjPoint& x) const {
        FqMat m{p_.coords(), q_.coords(), x.coords()};
        return rank(std::move(m)) <= 2;
    }

    // Line identity is Plücker-key identity.
    bool operator==(const LineP3& o) const { return key_ == o.key_; }
    bool operator!=(const LineP3& o) const { return !(*this == o); }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < key_.size(); ++i) {
            if (i) os << ":";
            os << key_[i].to_hex();
        }
        os << "]";
        return os.str();
    }

  private:
    ProjPoint p_, q_;
    FqVec key_;
};

inline LineP3 line_through(const ProjPoint& p, const ProjPoint& q) { return LineP3(p, q); }

class PlaneP3 {
  public:
    explicit PlaneP3(MultiPoly form) : form_(std::move(form)) {
        if (form_.is_zero() || form_.nvars() != 4 || form_.degree() != 1 ||
            !form_.is_homogeneous())
            throw GeometryError("plane needs a nonzero linear form in 4 variables");
        // normalize the coefficient vector like a point
        FqVec c = coeffs();
        c = normalize_coords(std::move(c));
        MultiPoly f(form_.spec(), 4);
        for (int i = 0; i < 4; ++i) {
            Expo e(4, 0);
            e[i] = 1;
            f.add_term(std::move(e), c[i]);
        }
        form_ = std::move(f);
    }

    const MultiPoly& form() const { return form_; }

    FqVec coeffs() const {
        FqVec c(4, Fq::zero(form_.spec()));
        for (const auto& [e, cc] : form_.terms())
            for (int i = 0; i < 4; ++i)
                if (e[i] == 1) c[i] = cc;
        return c;
    }

    bool contains(const ProjPoint& x) const { return form_.eval(x.coords()).is_zero(); }
    bool contains(const LineP3& l) const { return contains(l.p()) && contains(l.q()); }

    bool operator==(const PlaneP3& o) const { return form_ == o.form_; }

  private:
    MultiPoly form_;
};

inline PlaneP3 plane_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
    FieldSpec spec = p[0].spec();
    FqMat m{p.coords(), q.coords(), r.coords()};
    auto basis = kernel(std::move(m), spec);
    if (basis.size() != 1) throw GeometryError("collinear triple spans no plane");
    MultiPoly f(spec, 4);
    for (int i = 0; i < 4; ++i) {
        Expo e(4, 0);
        e[i] = 1;
        f.add_term(std::move(e), basis[0][i]);
    }
    return PlaneP3(std::move(f));
}

inline LineP3 planes_meet(const PlaneP3& h1, const PlaneP3& h2) {
    FieldSpec spec = h1.form().spec();
    if (proportional(h1.form(), h2.form())) throw GeometryError("planes coincide");
    FqMat m{h1.coeffs(), h2.coeffs()};
    auto basis = kernel(std::move(m), spec);
    if (basis.size() != 2) throw GeometryError("plane pair does not cut a line");
    return LineP3(ProjPoint(basis[0]), ProjPoint(basis[1]));
}

// Pullback of f (homogeneous, 4 vars) along the line's parametrization.
inline MultiPoly restrict_to_line(const MultiPoly& f, const LineP3& l) {
    return poly_pullback(f, l.param());
}

inline bool line_on_surface(const MultiPoly& f, const LineP3& l) {
    return restrict_to_line(f, l).is_zero();
}

// No four of the six points coplanar: all 15 quadruple determinants nonzero.
inline bool general_position6(const std::vector<ProjPoint>& pts) {
    if (pts.size() != 6) throw GeometryError("general_position6 needs six points");
    FieldSpec spec = pts[0][0].spec();
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            for (int c = b + 1; c < 6; ++c)
                for (int d = c + 1; d < 6; ++d) {
                    FqMat m{pts[a].coords(), pts[b].coords(), pts[c].coords(),
                            pts[d].coords()};
                    if (det(std::move(m), spec).is_zero()) return false;
                }
    return true;
}

// Two lines in P^3 meet iff their four spanning points are coplanar.
inline bool lines_meet(const LineP3& l1, const LineP3& l2) {
    FieldSpec spec = l1.p()[0].spec();
    FqMat m{l1.p().coords(), l1.q().coords(), l2.p().coords(), l2.q().coords()};
    return det(std::move(m), spec).is_zero();
}

// The same test through the Plücker pairing x1*y1' + ... + y3*x3'.
inline bool lines_meet_pluecker(const LineP3& l1, const LineP3& l2) {
    const FqVec& a = l1.pluecker();
    const FqVec& b = l2.pluecker();
    Fq s = a[0] * b[3] + a[1] * b[4] + a[2] * b[5] + a[3] * b[0] + a[4] * b[1] + a[5] * b[2];
    return s.is_zero();
}

}  // namespace k3k
