// Acceptance suite: ten headline checks, one PASS/FAIL line each, with
// wall-clock budgets. Exits nonzero if any check fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "k3k/congruence.hpp"
#include "k3k/lattice.hpp"
#include "k3k/segre.hpp"
#include "k3k/suites.hpp"
#include "k3k/weddle.hpp"

using namespace k3k;

namespace {

int failures = 0;

void run(const std::string& name, double limit_ms, const std::function<bool(std::string&)>& fn) {
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (limit_ms > 0 && ms > limit_ms) {
        ok = false;
        detail += " [over time budget]";
    }
    std::printf("%-4s %-28s %8.1f ms  %s\n", ok ? "PASS" : "FAIL", name.c_str(), ms,
                detail.c_str());
    if (!ok) ++failures;
}

WeddleParams acceptance_weddle() {
    FieldSpec s(4);
    return WeddleParams(Fq(s, 2), Fq(s, 3), Fq(s, 4), Fq(s, 5));
}

}  // namespace

int main() {
    // 1. brute-force scan of P^3(F16) finds exactly the seven expected
    //    singular points of the determinantal quartic
    run("1_quartic_completeness", 10000, [](std::string& d) {
        WeddleParams p = acceptance_weddle();
        MultiPoly w = weddle_equation(p);
        auto scan = singular_points_bruteforce(w, p.spec());
        auto nodes = weddle_nodes(p);
        std::set<std::string> a, b;
        for (const auto& x : scan) a.insert(x.to_string());
        for (const auto& x : nodes) b.insert(x.to_string());
        d = std::to_string(scan.size()) + " singular points among 4369 scanned";
        return scan.size() == 7 && a == b;
    });

    // 2. all 26 curves lie on the quartic; the (16_6) incidence equals the
    //    abstract configuration and is non-degenerate
    run("2_curve_inventory", 5000, [](std::string& d) {
        WeddleParams p = acceptance_weddle();
        MultiPoly w = weddle_equation(p);
        int on = 0;
        for (const auto& l : node_lines(p))
            if (line_on_surface(w, l)) ++on;
        if (poly_pullback(w, twisted_cubic(p)).is_zero()) ++on;
        for (const auto& r : residual_lines(p))
            if (line_on_surface(w, r.line)) ++on;
        auto inc = kummer_incidence(p);
        bool match = inc.matrix == abstract_kummer().matrix;
        bool nondeg = nondegenerate_16_6(inc);
        d = std::to_string(on) + "/26 curves on the quartic, matrix match=" +
            (match ? "yes" : "no") + ", nondegenerate=" + (nondeg ? "yes" : "no");
        return on == 26 && match && nondeg;
    });

    // 3. the cubic involution: preserves the quartic, squares to the identity
    //    times (xyzw)^2, fixes the extra singular point, swaps the twisted
    //    cubic with the sixth-point line, and splits the six crossing lines
    //    into three orbits
    run("3_cubic_involution", 10000, [](std::string& d) {
        WeddleParams p = acceptance_weddle();
        FieldSpec s = p.spec();
        PolyMap t = hutchinson_map(p);
        MultiPoly w = weddle_equation(p);
        MultiPoly xyzw = MultiPoly::constant(s, 4, Fq::one(s));
        for (int i = 0; i < 4; ++i) xyzw = xyzw * MultiPoly::variable(s, 4, i);
        bool preserves_w = proportional(poly_pullback(w, t), w * xyzw * xyzw).has_value();
        PolyMap tt = compose(t, t);
        bool square_identity = true;
        for (int i = 0; i < 4; ++i) {
            MultiPoly expected = MultiPoly::variable(s, 4, i) * xyzw * xyzw;
            if (!proportional(tt.components[size_t(i)], expected).has_value())
                square_identity = false;
        }
        ProjPoint extra = p.candidate_nodes()[6];
        bool fixes_extra = ProjPoint(t.apply(extra.coords())) == extra;
        auto orbits = hutchinson_orbits(p);
        std::ostringstream os;
        os << "pullback=" << (preserves_w ? "ok" : "no") << " square=" <<
            (square_identity ? "ok" : "no") << " fixes P=" << (fixes_extra ? "ok" : "no")
           << " swaps cubic=" << (orbits.swaps_cubic_with_l56 ? "ok" : "no") << " orbits="
           << orbits.orbit_count;
        d = os.str();
        return preserves_w && square_identity && fixes_extra && orbits.involution_on_lines &&
               orbits.swaps_cubic_with_l56 && orbits.crossing_line_count == 6 &&
               orbits.orbit_count == 3;
    });

    // 4. the cubic threefold: ten singular points, none others over F2 or F4,
    //    and the quadric parametrization pulls the cubic back to zero
    run("4_cubic_threefold_nodes", 5000, [](std::string& d) {
        int counts[2] = {0, 0};
        bool ten_each = true;
        for (int k : {1, 2}) {
            FieldSpec s(k);
            MultiPoly f = segre_equation(s);
            auto nodes = segre_nodes(s);  // throws if any of the 10 is not singular
            int found = 0;
            for (const auto& pt : enumerate_proj_points(s, 5))
                if (f.eval(pt.coords()).is_zero() && is_singular_at(f, pt.coords())) ++found;
            counts[k - 1] = found;
            ten_each = ten_each && nodes.size() == 10 && found == 10;
        }
        bool pullback_zero =
            poly_pullback(segre_equation(FieldSpec(1)), phi_map(FieldSpec(1))).is_zero();
        d = "F2 scan: " + std::to_string(counts[0]) + ", F4 scan: " + std::to_string(counts[1]) +
            ", pullback " + (pullback_zero ? "zero" : "nonzero");
        return ten_each && pullback_zero;
    });

    // 5. the two mod-2 representations close to groups of order 720 and act
    //    as expected on the cubic, the quadric, and the fixed subspaces
    run("5_group_actions", 10000, [](std::string& d) {
        auto grp33 = group_closure(rep33_generators());
        auto grp222 = group_closure(rep222_generators());
        FieldSpec s(1);
        MultiPoly cubic = segre_equation(s);
        MultiPoly q = branch_quadric(s);
        bool pres33 = true, pres222 = true;
        for (const auto& g : grp33) pres33 &= preserves(cubic, g);
        for (const auto& g : grp222) pres222 &= preserves(q, g);
        auto fix33 = fixed_space_f2(rep33_generators());
        auto fix222 = fixed_space_f2(rep222_generators());
        bool ones = false;
        for (const auto& v : fix222) ones |= (v == std::array<uint8_t, 5>{1, 1, 1, 1, 1});
        d = "orders " + std::to_string(grp33.size()) + "/" + std::to_string(grp222.size()) +
            ", fixed dims " + std::to_string(fix33.size()) + "/" + std::to_string(fix222.size());
        return grp33.size() == 720 && grp222.size() == 720 && pres33 && pres222 &&
               fix33.empty() && ones;
    });

    // 6. the polar quadric at a parametrized point pulls back to a quartic
    //    singular at the six reference points and containing all 16 A-curves
    run("6_polar_pullback", 30000, [](std::string& d) {
        FieldSpec s(4);
        Rng rng(2024);
        int contained = 0, with_scale = 0;
        const int n = 25;
        for (int i = 0; i < n; ++i) {
            // random parameters in general position
            for (int attempt = 0; attempt < 500; ++attempt) {
                try {
                    WeddleParams p(rng.nonzero(s), rng.nonzero(s), rng.nonzero(s),
                                   rng.nonzero(s));
                    auto rep = weddle_via_polar(p);
                    if (rep.singular_at_all_six && rep.contains_node_lines && rep.contains_cubic)
                        ++contained;
                    if (rep.weddle_scale) ++with_scale;
                    break;
                } catch (const GenericityError&) {
                    continue;
                }
            }
        }
        d = std::to_string(contained) + "/" + std::to_string(n) + " contained, " +
            std::to_string(with_scale) + " proportional to the determinantal quartic";
        return contained == n;
    });

    // 7. five parameter sets of order two and class two, no ray inside the
    //    branch quadric; the sixteen-line instance yields the non-degenerate
    //    (16_6) with all pencil vertices on the quadric
    run("7_line_congruence", 300000, [](std::string& d) {
        FieldSpec s(4);
        Rng rng(77);
        int sets_done = 0, rejected = 0;
        std::ostringstream os;
        bool ok = true;
        for (int attempt = 0; attempt < 200 && sets_done < 5; ++attempt) {
            std::vector<Fq> v;
            if (sets_done == 0) {
                CongruenceParams gp = good_params_gf16();
                v = {gp.a1, gp.a2, gp.a3, gp.c1, gp.c2, gp.c3,
                     gp.al1, gp.al2, gp.al3, gp.be1, gp.be2, gp.be3};
            } else {
                for (int i = 0; i < 12; ++i) v.push_back(rng.element(s));
            }
            std::string label = sets_done == 0 ? "fixed" : "random";
            try {
                CongruenceParams p(v);
                MultiPoly f2 = f2_from_params(p);
                CongruenceSurface surf = congruence_points(p);
                if (surf.points.empty()) continue;
                bool ray_free = true;
                for (const auto& key : surf.points)
                    if (line_on_surface(f2, line_of_pluecker(key, s))) ray_free = false;
                if (!ray_free) {
                    ++rejected;
                    continue;
                }
                int order_true = 0, class_true = 0;
                for (int i = 0; i < 50; ++i) {
                    FqVec x{rng.element(s), rng.element(s), rng.element(s), rng.nonzero(s)};
                    if (order_check(surf, ProjPoint(x)).value_or(false)) ++order_true;
                    MultiPoly f(s, 4);
                    for (int j = 0; j < 4; ++j) {
                        Expo e(4, 0);
                        e[j] = 1;
                        f.add_term(std::move(e), j == 3 ? rng.nonzero(s) : rng.element(s));
                    }
                    if (class_check(surf, PlaneP3(std::move(f))).value_or(false)) ++class_true;
                }
                if (order_true < 45 || class_true < 45) {
                    ++rejected;  // samples hit the focal locus too often; redraw
                    continue;
                }
                os << "[" << label << " " << order_true << "/" << class_true << "]";
                ++sets_done;
            } catch (const GenericityError&) {
                continue;
            } catch (const DegenerateF2&) {
                continue;
            }
        }
        ok &= (sets_done == 5);
        // the sixteen-line instance
        CongruenceSurface surf = congruence_points(good_params_gf16());
        QuadricKummer k = kummer_on_quadric(surf);
        bool sym = is_symmetric_config(k.incidence, 6);
        bool iso = incidence_isomorphic(k.incidence, abstract_kummer());
        ok &= k.vertices.size() == 16 && k.vertices_on_quadric && sym && iso;
        os << " 16 lines: vertices-on-quadric=" << (k.vertices_on_quadric ? "yes" : "no")
           << " isomorphic=" << (iso ? "yes" : "no");
        if (rejected > 0) os << " (" << rejected << " redraws)";
        d = os.str();
        return ok;
    });

    // 8. configuration counts
    run("8_configuration_counts", 1000, [](std::string& d) {
        DP4LineGraph g;
        auto ros = rosenhain_enumerate(g);
        auto goe = goepel_enumerate(g);
        auto sym = symplectic_counts();
        auto cr = cremona_richmond();
        auto dg = diagram_8_4();
        bool ok = ros.size() == 20 && goe.size() == 30 && sym.planes == 35 &&
                  sym.isotropic == 15 && sym.nonisotropic == 20 && sym.goepel_cosets == 60 &&
                  sym.rosenhain_cosets == 80 && is_symmetric_config(cr, 3) &&
                  is_symmetric_config(dg, 4);
        d = "pairs=" + std::to_string(ros.size()) + " tetrads=" + std::to_string(goe.size()) +
            " planes=35/15/20 cosets=60/80 (15_3) (8_4)";
        return ok;
    });

    // 9. lattice identities
    run("9_lattice_identities", 1000, [](std::string& d) {
        auto st = shioda_tate_bound(8);
        bool disc_ok = st.disc_trivial == (uint64_t(1) << 14) && st.sigma && *st.sigma == 4;
        auto inc = abstract_kummer();
        GramLattice gram = config_gram(inc);
        // the two elliptic fiber classes and their cross terms
        auto cls = [&](std::initializer_list<std::pair<const char*, int64_t>> terms) {
            std::vector<int64_t> v(gram.rank(), 0);
            for (const auto& [lab, c] : terms) {
                bool found = false;
                for (size_t i = 0; i < inc.a_labels.size(); ++i)
                    if (inc.a_labels[i] == lab) {
                        v[i] = c;
                        found = true;
                    }
                for (size_t j = 0; j < inc.b_labels.size(); ++j)
                    if (inc.b_labels[j] == lab) {
                        v[16 + j] = c;
                        found = true;
                    }
                if (!found) throw std::invalid_argument(lab);
            }
            return v;
        };
        auto F = cls({{"R", 2}, {"p1", 1}, {"p2", 1}, {"p3", 1}, {"p4", 1}});
        auto G = cls({{"l56", 2}, {"123|456", 1}, {"124|356", 1}, {"134|256", 1},
                      {"156|234", 1}});
        auto E0 = cls({{"R", 1}});
        bool fg_ok = divisor_pairing(F, F, gram) == 0 && divisor_pairing(G, G, gram) == 0 &&
                     divisor_pairing(F, G, gram) == 0 && divisor_pairing(E0, F, gram) == 0;
        bool euler_ok = [] {
            std::vector<FiberType> fibers(3, fiber_D4tilde());
            for (int i = 0; i < 6; ++i) fibers.push_back(fiber_A1star());
            return euler_bound(fibers, 24).exceeds;
        }();
        bool index_ok = config_total_square(inc) == 128 && index_from_identity(128) == 6;
        bool chern_ok = chern_count(RuledSurface::Quadric, {4, 4}) == 20 &&
                        chern_count(RuledSurface::P2, {6}) == 21;
        d = std::string("disc=2^14 sigma=4 F/G squares zero total=128 n=6 chern 20/21 ") +
            (euler_ok ? "30>24" : "bound fail");
        return disc_ok && fg_ok && euler_ok && index_ok && chern_ok;
    });

    // 10. double-plane determinant identity and the ten-conics intersection
    run("10_double_plane_conics", 30000, [](std::string& d) {
        auto rep = double_plane_identity(FieldSpec(8), 1000, 12345);
        bool dp_ok = rep.samples == 1000 && rep.disagreements == 0;
        FieldSpec base(4);
        Rng rng(8);
        int good = 0;
        const int n = 100;
        for (int i = 0; i < n; ++i) {
            auto tc = ten_conics_sample(base, rng);
            if (tc.conics_fit && tc.common_point_count == 2 && tc.line_matches_dual &&
                tc.gradient_vanishes && tc.off_branch_curve)
                ++good;
        }
        d = std::to_string(rep.samples) + " determinant samples, " +
            std::to_string(rep.disagreements) + " disagreements; " + std::to_string(good) +
            "/" + std::to_string(n) + " conic samples verified";
        return dp_ok && good == n;
    });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria satisfied\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
