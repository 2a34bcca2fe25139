#pragma once

// Sparse multivariate polynomial arithmetic over GF(2^k).
// Terms are kept in descending graded-reverse-lexicographic order, which fixes
// the printing order, the lead term for exact division, and the coefficient
// order used by the characteristic-2 linear-algebra reductions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "k3k/gf2k.hpp"

namespace k3k {

struct ArityMismatch : std::runtime_error {
    explicit ArityMismatch(const std::string& what) : std::runtime_error(what) {}
};

using Expo = std::vector<uint16_t>;

inline int total_degree(const Expo& e) {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

// a > b in grevlex: higher total degree wins; on ties the rightmost nonzero
// entry of a-b is negative.
struct GrevlexGreater {
    bool operator()(const Expo& a, const Expo& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    }
};

class MultiPoly {
  public:
    using TermMap = std::map<Expo, Fq, GrevlexGreater>;

    MultiPoly(FieldSpec spec, int nvars) : spec_(spec), nvars_(nvars) {}

    static MultiPoly zero(FieldSpec spec, int nvars) { return MultiPoly(spec, nvars); }
    static MultiPoly constant(FieldSpec spec, int nvars, Fq c) {
        MultiPoly p(spec, nvars);
        p.add_term(Expo(nvars, 0), c);
        return p;
    }
    static MultiPoly variable(FieldSpec spec, int nvars, int i) {
        MultiPoly p(spec, nvars);
        Expo e(nvars, 0);
        e[i] = 1;
        p.add_term(e, Fq::one(spec));
        return p;
    }
    static MultiPoly monomial(FieldSpec spec, Expo e, Fq c) {
        MultiPoly p(spec, int(e.size()));
        p.add_term(std::move(e), c);
        return p;
    }

    const FieldSpec& spec() const { return spec_; }
    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Characteristic 2: adding a term twice cancels it.
    void add_term(Expo e, Fq c) {
        if (int(e.size()) != nvars_) throw ArityMismatch("exponent arity");
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            Fq s = it->second + c;
            if (s.is_zero())
                terms_.erase(it);
            else
                it->second = s;
        }
    }

    MultiPoly operator+(const MultiPoly& o) const {
        check(o);
        MultiPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check(o);
        MultiPoly r(spec_, nvars_);
        for (const auto& [e1, c1] : terms_) {
            for (const auto& [e2, c2] : o.terms_) {
                Expo e(nvars_);
                for (int i = 0; i < nvars_; ++i) e[i] = uint16_t(e1[i] + e2[i]);
                r.add_term(std::move(e), c1 * c2);
            }
        }
        return r;
    }

    MultiPoly scaled(Fq c) const {
        MultiPoly r(spec_, nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
        return r;
    }

    Fq eval(const std::vector<Fq>& p) const {
        if (int(p.size()) != nvars_) throw ArityMismatch("evaluation arity");
        Fq s = Fq::zero(spec_);
        for (const auto& [e, c] : terms_) {
            Fq v = c;
            for (int i = 0; i < nvars_; ++i)
                if (e[i] != 0) v = v * p[i].pow(e[i]);
            s = s + v;
        }
        return s;
    }

    // Formal partial derivative; even exponents annihilate in characteristic 2.
    MultiPoly partial(int i) const {
        MultiPoly r(spec_, nvars_);
        for (const auto& [e, c] : terms_) {
            if (e[i] % 2 == 1) {
                Expo e2 = e;
                e2[i] -= 1;
                r.terms_.emplace(std::move(e2), c);
            }
        }
        return r;
    }

    // Substitute variable i by comps[i]; comps share one variable count.
    MultiPoly substituted(const std::vector<MultiPoly>& comps) const {
        if (int(comps.size()) != nvars_) throw ArityMismatch("substitution arity");
        int out_nvars = comps.empty() ? 0 : comps[0].nvars();
        MultiPoly r(spec_, out_nvars);
        for (const auto& [e, c] : terms_) {
            MultiPoly t = MultiPoly::constant(spec_, out_nvars, c);
            for (int i = 0; i < nvars_; ++i) {
                for (int rep = 0; rep < e[i]; ++rep) t = t * comps[i];
            }
            r = r + t;
        }
        return r;
    }

    int degree() const {
        return terms_.empty() ? -1 : total_degree(terms_.begin()->first);
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = degree();
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    // Largest monomial dividing every term (and every term of each extra poly).
    Expo common_monomial() const {
        Expo m(nvars_, 0);
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) {
                m = e;
                first = false;
            } else {
                for (int i = 0; i < nvars_; ++i) m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    bool operator==(const MultiPoly& o) const {
        return spec_ == o.spec_ && nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    std::string to_string(const std::string& varstem = "x") const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << c.to_hex();
            for (int i = 0; i < nvars_; ++i) {
                if (e[i] == 0) continue;
                os << "*" << varstem << i;
                if (e[i] > 1) os << "^" << e[i];
            }
        }
        return os.str();
    }

    static MultiPoly parse(FieldSpec spec, int nvars, const std::string& text,
                           const std::string& varstem = "x");

  private:
    void check(const MultiPoly& o) const {
        if (!(spec_ == o.spec_)) throw SpecMismatch("polynomials from different fields");
        if (nvars_ != o.nvars_) throw ArityMismatch("polynomials with different arity");
    }

    FieldSpec spec_;
    int nvars_;
    TermMap terms_;
};

inline Fq poly_eval(const MultiPoly& f, const std::vector<Fq>& p) { return f.eval(p); }

// true iff f(p)=0 and all formal partials vanish at p (f homogeneous).
inline bool is_singular_at(const MultiPoly& f, const std::vector<Fq>& p) {
    if (!f.eval(p).is_zero()) return false;
    for (int i = 0; i < f.nvars(); ++i)
        if (!f.partial(i).eval(p).is_zero()) return false;
    return true;
}

// Scalar c with f = c*g, if any (g nonzero).
inline std::optional<Fq> proportional(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return std::nullopt;
    auto itf = f.terms().begin();
    auto itg = g.terms().begin();
    if (itf->first != itg->first) return std::nullopt;
    Fq c = itf->second * itg->second.inv();
    return (f == g.scaled(c)) ? std::optional<Fq>(c) : std::nullopt;
}

// Exact quotient f/g, or nullopt when the division leaves a remainder.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) return std::nullopt;
    MultiPoly rem = f;
    MultiPoly q(f.spec(), f.nvars());
    const auto& [ge, gc] = *g.terms().begin();
    Fq gcinv = gc.inv();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms().begin();
        Expo qe(rem.nvars());
        for (int i = 0; i < rem.nvars(); ++i) {
            if (re[i] < ge[i]) return std::nullopt;
            qe[i] = uint16_t(re[i] - ge[i]);
        }
        Fq qc = rc * gcinv;
        MultiPoly qt = MultiPoly::monomial(f.spec(), qe, qc);
        q = q + qt;
        rem = rem + qt * g;  // char 2: subtraction is addition
    }
    return q;
}

// Determinant of a square polynomial matrix by first-row cofactor expansion
// (signs are irrelevant in characteristic 2).
inline MultiPoly poly_det(const std::vector<std::vector<MultiPoly>>& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw ArityMismatch("poly_det needs a square matrix");
    const MultiPoly& probe = m[0][0];
    if (n == 1) return m[0][0];
    MultiPoly r(probe.spec(), probe.nvars());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MultiPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        r = r + m[0][j] * poly_det(minor);
    }
    return r;
}

// A list of homogeneous components of one shared degree: a rational map.
struct PolyMap {
    int source_nvars = 0;
    std::vector<MultiPoly> components;

    PolyMap() = default;
    PolyMap(int src, std::vector<MultiPoly> comps)
        : source_nvars(src), components(std::move(comps)) {
        if (components.empty()) throw ArityMismatch("empty map");
        int d = -1;
        bool all_zero = true;
        for (const auto& c : components) {
            if (c.nvars() != source_nvars) throw ArityMismatch("map component arity");
            if (c.is_zero()) continue;
            all_zero = false;
            if (!c.is_homogeneous()) throw ArityMismatch("map component not homogeneous");
            if (d < 0)
                d = c.degree();
            else if (c.degree() != d)
                throw ArityMismatch("map components of mixed degree");
        }
        if (all_zero) throw ArityMismatch("all map components zero");
    }

    int target_count() const { return int(components.size()); }
    int degree() const {
        for (const auto& c : components)
            if (!c.is_zero()) return c.degree();
        return -1;
    }

    std::vector<Fq> apply(const std::vector<Fq>& p) const {
        std::vector<Fq> out;
        out.reserve(components.size());
        for (const auto& c : components) out.push_back(c.eval(p));
        return out;
    }
};

inline MultiPoly poly_pullback(const MultiPoly& f, const PolyMap& m) {
    if (f.nvars() != m.target_count()) throw ArityMismatch("pullback arity");
    return f.substituted(m.components);
}

// m1 after m2 (apply m2 first).
inline PolyMap compose(const PolyMap& m1, const PolyMap& m2) {
    std::vector<MultiPoly> comps;
    comps.reserve(m1.components.size());
    for (const auto& c : m1.components) comps.push_back(poly_pullback(c, m2));
    return PolyMap(m2.source_nvars, std::move(comps));
}

// ---- binary forms (nvars == 2, variables s,t) -------------------------------

// Coefficient vector (c_0..c_d) of a binary form sum c_i s^i t^(d-i).
inline std::vector<Fq> binary_coeffs(const MultiPoly& f, int d) {
    std::vector<Fq> c(size_t(d) + 1, Fq::zero(f.spec()));
    for (const auto& [e, cc] : f.terms()) {
        if (e[0] + e[1] != d) throw ArityMismatch("binary form of wrong degree");
        c[e[0]] = cc;
    }
    return c;
}

inline MultiPoly binary_from_coeffs(FieldSpec spec, const std::vector<Fq>& c) {
    MultiPoly f(spec, 2);
    int d = int(c.size()) - 1;
    for (int i = 0; i <= d; ++i)
        f.add_term(Expo{uint16_t(i), uint16_t(d - i)}, c[i]);
    return f;
}

// true iff the nonzero binary quadratic a*s^2+b*st+c*t^2 has distinct roots,
// i.e. b != 0 (characteristic 2).
inline bool binary_separable(const MultiPoly& b) {
    if (b.is_zero()) throw ArityMismatch("binary_separable of zero form");
    auto c = binary_coeffs(b, 2);
    return !c[1].is_zero();
}

namespace detail {

// Univariate gcd over GF(2^k); polynomials as low-to-high coefficient vectors.
inline std::vector<Fq> uni_trim(std::vector<Fq> p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}
inline std::vector<Fq> uni_mod(std::vector<Fq> a, const std::vector<Fq>& b) {
    Fq lead_inv = b.back().inv();
    while (a.size() >= b.size()) {
        Fq f = a.back() * lead_inv;
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] + f * b[i];
        a = uni_trim(std::move(a));
        if (a.empty()) break;
    }
    return a;
}
inline std::vector<Fq> uni_gcd(std::vector<Fq> a, std::vector<Fq> b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        auto r = uni_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Fq inv = a.back().inv();
        for (auto& c : a) c = c * inv;
    }
    return a;
}

}  // namespace detail

// Degree of the gcd of a set of binary forms (degrees given per form);
// counts a common t-power as well. Zero forms are skipped.
inline int binary_common_factor_degree(const std::vector<MultiPoly>& forms,
                                       const std::vector<int>& degrees) {
    std::vector<Fq> g;
    int tpow = -1;
    bool any = false;
    for (size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].is_zero()) continue;
        auto c = binary_coeffs(forms[i], degrees[i]);  // c_j = coeff of s^j
        auto u = detail::uni_trim(c);                  // poly in u = s/t
        int tp = degrees[i] - (int(u.size()) - 1);
        if (!any) {
            g = u;
            tpow = tp;
            any = true;
        } else {
            g = detail::uni_gcd(std::move(g), u);
            tpow = std::min(tpow, tp);
        }
    }
    if (!any) return -1;  // all zero
    return (int(g.size()) - 1) + tpow;
}

// gcd of binary forms, re-homogenized.
inline MultiPoly binary_gcd(const std::vector<MultiPoly>& forms, const std::vector<int>& degrees,
                            FieldSpec spec) {
    std::vector<Fq> g;
    int tpow = -1;
    bool any = false;
    for (size_t i = 0; i < forms.size(); ++i) {
        if (forms[i].is_zero()) continue;
        auto u = detail::uni_trim(binary_coeffs(forms[i], degrees[i]));
        int tp = degrees[i] - (int(u.size()) - 1);
        if (!any) {
            g = u;
            tpow = tp;
            any = true;
        } else {
            g = detail::uni_gcd(std::move(g), u);
            tpow = std::min(tpow, tp);
        }
    }
    if (!any) return MultiPoly::zero(spec, 2);
    MultiPoly r(spec, 2);
    int ds = int(g.size()) - 1;
    for (int i = 0; i <= ds; ++i)
        r.add_term(Expo{uint16_t(i), uint16_t(ds - i + tpow)}, g[i]);
    return r;
}

// true iff b (binary form of degree 2k) splits as a*c + c^2 for some binary
// form c of degree <= k, where a has degree k. The map c -> a*c + c^2 is
// F2-additive, so this is a linear system over F2 in the bits of c's
// coefficients.
inline bool binary_splitting(const MultiPoly& a, const MultiPoly& b, int k) {
    FieldSpec spec = a.spec();
    const int m = spec.degree();
    const int nunk = (k + 1) * m;       // bits of c
    const int neq = (2 * k + 1) * m;    // bits of b's coefficients
    // columns: image of each basis bit of c under c -> a*c + c^2
    std::vector<std::vector<uint8_t>> cols;
    for (int i = 0; i <= k; ++i) {
        for (int j = 0; j < m; ++j) {
            MultiPoly c = MultiPoly::monomial(
                spec, Expo{uint16_t(i), uint16_t(k - i)}, Fq(spec, uint64_t(1) << j));
            MultiPoly img = a * c + c * c;
            auto cc = binary_coeffs(img, 2 * k);
            std::vector<uint8_t> col(neq, 0);
            for (int t = 0; t <= 2 * k; ++t)
                for (int bb = 0; bb < m; ++bb)
                    col[t * m + bb] = uint8_t((cc[t].bits() >> bb) & 1);
            cols.push_back(std::move(col));
        }
    }
    auto bc = binary_coeffs(b, 2 * k);
    std::vector<uint8_t> rhs(neq, 0);
    for (int t = 0; t <= 2 * k; ++t)
        for (int bb = 0; bb < m; ++bb) rhs[t * m + bb] = uint8_t((bc[t].bits() >> bb) & 1);
    // Gaussian elimination over F2 on [cols | rhs]
    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int c = 0; c < nunk && row < neq; ++c) {
        int pr = -1;
        for (int r = row; r < neq; ++r)
            if (cols[c][r]) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int cc2 = 0; cc2 < nunk; ++cc2) std::swap(cols[cc2][row], cols[cc2][pr]);
        std::swap(rhs[row], rhs[pr]);
        for (int r = 0; r < neq; ++r) {
            if (r != row && cols[c][r]) {
                for (int cc2 = 0; cc2 < nunk; ++cc2) cols[cc2][r] ^= cols[cc2][row];
                rhs[r] ^= rhs[row];
            }
        }
        pivot_col_of_row.push_back(c);
        ++row;
    }
    for (int r = row; r < neq; ++r)
        if (rhs[r]) return false;
    return true;
}

// ---- parsing ----------------------------------------------------------------

inline MultiPoly MultiPoly::parse(FieldSpec spec, int nvars, const std::string& text,
                                  const std::string& varstem) {
    MultiPoly p(spec, nvars);
    std::string s = text;
    if (s == "0") return p;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;
        // split on '*'
        std::vector<std::string> factors;
        size_t fp = 0;
        while (fp < term.size()) {
            size_t star = term.find('*', fp);
            factors.push_back(term.substr(fp, star == std::string::npos ? star : star - fp));
            fp = star == std::string::npos ? term.size() : star + 1;
        }
        Fq c = Fq::parse_hex(spec, factors[0]);
        Expo e(nvars, 0);
        for (size_t i = 1; i < factors.size(); ++i) {
            const std::string& f = factors[i];
            if (f.compare(0, varstem.size(), varstem) != 0)
                throw ArityMismatch("bad variable in term: " + f);
            size_t caret = f.find('^');
            int vi = std::stoi(f.substr(varstem.size(),
                                        caret == std::string::npos ? caret
                                                                   : caret - varstem.size()));
            int pw = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
            if (vi < 0 || vi >= nvars) throw ArityMismatch("variable index out of range");
            e[vi] = uint16_t(e[vi] + pw);
        }
        p.add_term(std::move(e), c);
    }
    return p;
}

}  // namespace k3k
