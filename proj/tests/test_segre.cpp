// The ten-nodal cubic threefold in characteristic 2: node list against
// exhaustive scans, the quadric parametrization, the two five-dimensional
// mod-2 representations of the symmetric group on six letters, polar quadrics,
// and the branched double cover of P^4.

#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "k3k/segre.hpp"

using namespace k3k;

TEST_CASE("cubic equation basics") {
    FieldSpec s(1);
    MultiPoly f = segre_equation(s);
    CHECK(f.degree() == 3);
    CHECK(f.is_homogeneous());
    Fq z = Fq::zero(s), o = Fq::one(s);
    CHECK(f.eval({z, z, z, z, o}).is_zero());
    // e0 lies on the cubic but is a smooth point
    CHECK(f.eval({o, z, z, z, z}).is_zero());
    CHECK(!is_singular_at(f, {o, z, z, z, z}));
}

TEST_CASE("exactly ten singular points over F2 and F4") {
    for (int k : {1, 2}) {
        FieldSpec s(k);
        MultiPoly f = segre_equation(s);
        auto nodes = segre_nodes(s);
        REQUIRE(nodes.size() == 10);
        for (const auto& n : nodes) CHECK(is_singular_at(f, n.coords()));
        // independent exhaustive scan
        int count = 0;
        for (const auto& pt : enumerate_proj_points(s, 5))
            if (f.eval(pt.coords()).is_zero() && is_singular_at(f, pt.coords())) ++count;
        CHECK(count == 10);
    }
    // the specific 0/1 point [0,1,0,1,1]
    FieldSpec s(1);
    Fq z = Fq::zero(s), o = Fq::one(s);
    CHECK(is_singular_at(segre_equation(s), {z, o, z, o, o}));
}

TEST_CASE("quadric parametrization lands on the cubic") {
    for (int k : {1, 2, 4}) {
        FieldSpec s(k);
        PolyMap phi = phi_map(s);
        CHECK(phi.degree() == 2);
        CHECK(phi.target_count() == 5);
        CHECK(poly_pullback(segre_equation(s), phi).is_zero());
        // the components are quadrics through the five reference points:
        // they all vanish at the unit point
        std::vector<Fq> unit(4, Fq::one(s));
        for (const auto& c : phi.components) CHECK(c.eval(unit).is_zero());
    }
}

TEST_CASE("generator matrices are invertible and satisfy the braid relations") {
    for (auto gens : {rep33_generators(), rep222_generators()}) {
        REQUIRE(gens.size() == 5);
        CHECK(coxeter_relations_hold(gens));
        for (const auto& g : gens) {
            // involutions, hence invertible over F2
            CHECK(g * g == MatF2::identity(5));
        }
    }
}

TEST_CASE("group closures have order 720") {
    CHECK(group_closure({MatF2::identity(5)}).size() == 1);
    CHECK(group_closure(rep33_generators()).size() == 720);
    CHECK(group_closure(rep222_generators()).size() == 720);
    CHECK_THROWS_AS(group_closure(rep33_generators(), 100), CapExceeded);
}

TEST_CASE("invariance of the cubic and the quadric") {
    FieldSpec s(1);
    MultiPoly cubic = segre_equation(s);
    MultiPoly q = branch_quadric(s);
    for (const auto& g : group_closure(rep33_generators())) CHECK(preserves(cubic, g));
    for (const auto& g : group_closure(rep222_generators())) CHECK(preserves(q, g));
    // a non-member does not preserve the cubic: a transvection outside the group
    MatF2 bad = MatF2::identity(5);
    bad.m[0][1] = 1;
    bool in_group = group_closure(rep33_generators()).count(bad) > 0;
    if (!in_group) CHECK(!preserves(cubic, bad));
}

TEST_CASE("fixed subspaces of the two representations") {
    CHECK(fixed_space_f2(rep33_generators()).empty());
    auto fx = fixed_space_f2(rep222_generators());
    REQUIRE(fx.size() == 1);
    CHECK(fx[0] == std::array<uint8_t, 5>{1, 1, 1, 1, 1});
    CHECK(fixed_space_f2({MatF2::identity(5)}).size() == 5);
}

TEST_CASE("polar quadric edge cases") {
    FieldSpec s(2);
    MultiPoly x0cubed = MultiPoly::variable(s, 5, 0) * MultiPoly::variable(s, 5, 0) *
                        MultiPoly::variable(s, 5, 0);
    Fq z = Fq::zero(s), o = Fq::one(s);
    CHECK(polar_quadric(x0cubed, {o, z, z, z, z}) ==
          MultiPoly::variable(s, 5, 0) * MultiPoly::variable(s, 5, 0));
    // degenerate pole: x0^2 x1 has zero partial in x0 (even exponent), so the
    // polar at e0 vanishes identically
    MultiPoly f = MultiPoly::variable(s, 5, 0) * MultiPoly::variable(s, 5, 0) *
                  MultiPoly::variable(s, 5, 1);
    CHECK_THROWS_AS(polar_quadric(f, {o, z, z, z, z}), DegeneratePolar);
    // at a node the gradient vanishes when evaluated there, so the polar
    // quadric (a nonzero quadric in general) passes through the node itself
    auto node = segre_nodes(s)[9];
    MultiPoly qn = polar_quadric(segre_equation(s), node.coords());
    CHECK(qn.eval(node.coords()).is_zero());
}

TEST_CASE("polar quadric at a parametrized point pulls back to the quartic") {
    FieldSpec s(4);
    WeddleParams p(Fq(s, 2), Fq(s, 3), Fq(s, 4), Fq(s, 5));
    auto rep = weddle_via_polar(p);
    CHECK(rep.singular_at_all_six);
    CHECK(rep.contains_node_lines);
    CHECK(rep.contains_cubic);
    REQUIRE(rep.weddle_scale.has_value());
    CHECK(!rep.weddle_scale->is_zero());
}

TEST_CASE("double cover of P^4") {
    FieldSpec s(1);
    auto rep = cover_checks(s);
    CHECK(rep.deck_involution_fixes_equation);
    CHECK(rep.quadric_invariant);
    CHECK(rep.all_ones_fixed);
    CHECK(rep.smooth_quadric_points_f2 == 15);  // smooth quadric threefold over F2
}

TEST_CASE("parametrization intertwines the two group actions") {
    for (int k : {1, 4}) {
        auto probe = phi_equivariance_probe(FieldSpec(k));
        REQUIRE(probe.generator_matches.size() == 5);
        for (uint8_t m : probe.generator_matches) CHECK(m == 1);
    }
}
