// Projective geometry of P^3: points, lines via Plücker keys, planes,
// restriction to lines, and the two independent line-meeting tests compared
// against each other on random samples.

#include <catch2/catch_amalgamated.hpp>

#include "k3k/projgeom.hpp"
#include "k3k/rng.hpp"

using namespace k3k;

namespace {

ProjPoint random_point(FieldSpec s, Rng& rng) {
    for (;;) {
        FqVec v{rng.element(s), rng.element(s), rng.element(s), rng.element(s)};
        for (const auto& c : v)
            if (!c.is_zero()) return ProjPoint(std::move(v));
    }
}

LineP3 random_line(FieldSpec s, Rng& rng) {
    for (;;) {
        ProjPoint p = random_point(s, rng), q = random_point(s, rng);
        if (p != q) return LineP3(p, q);
    }
}

}  // namespace

TEST_CASE("point normalization and equality") {
    FieldSpec s(4);
    Fq c(s, 0x7);
    ProjPoint p(FqVec{Fq::one(s), Fq(s, 2), Fq(s, 3), Fq::zero(s)});
    ProjPoint q(FqVec{c, c * Fq(s, 2), c * Fq(s, 3), Fq::zero(s)});
    CHECK(p == q);
    CHECK_THROWS_AS(ProjPoint(FqVec(4, Fq::zero(s))), GeometryError);
}

TEST_CASE("coordinate lines") {
    FieldSpec s(2);
    Fq z = Fq::zero(s), o = Fq::one(s);
    ProjPoint e0(FqVec{o, z, z, z}), e1(FqVec{z, o, z, z});
    LineP3 l(e0, e1);
    // key has exactly one nonzero coordinate
    int nz = 0;
    for (const auto& c : l.pluecker())
        if (!c.is_zero()) ++nz;
    CHECK(nz == 1);
    CHECK(l.contains(ProjPoint(FqVec{o, o, z, z})));
    CHECK(!l.contains(ProjPoint(FqVec{o, o, o, z})));
    CHECK_THROWS_AS(LineP3(e0, e0), GeometryError);
}

TEST_CASE("Plücker keys satisfy the quadric relation") {
    FieldSpec s(4);
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        LineP3 l = random_line(s, rng);
        const FqVec& k = l.pluecker();
        // x1 y1 + x2 y2 + x3 y3 = 0 in the (x|y) split of the key
        Fq v = k[0] * k[3] + k[1] * k[4] + k[2] * k[5];
        CHECK(v.is_zero());
        // the line is independent of the spanning points chosen
        Fq a = rng.nonzero(s), b = rng.nonzero(s);
        ProjPoint u = l.at(a, b), w = l.at(b, a * a + b);
        if (u != w) CHECK(l == LineP3(u, w));
    }
}

TEST_CASE("two meeting tests agree on random pairs") {
    FieldSpec s(4);
    Rng rng(22);
    int met = 0;
    for (int i = 0; i < 1000; ++i) {
        LineP3 l1 = random_line(s, rng), l2 = random_line(s, rng);
        bool by_rank = lines_meet(l1, l2);
        bool by_pairing = lines_meet_pluecker(l1, l2);
        CHECK(by_rank == by_pairing);
        if (by_rank) ++met;
    }
    CHECK(met > 0);      // both outcomes occur
    CHECK(met < 1000);
}

TEST_CASE("planes: construction, containment, intersection") {
    FieldSpec s(2);
    Fq z = Fq::zero(s), o = Fq::one(s);
    ProjPoint e0(FqVec{o, z, z, z}), e1(FqVec{z, o, z, z}), e2(FqVec{z, z, o, z});
    PlaneP3 pl = plane_through(e0, e1, e2);
    CHECK(pl.form() == MultiPoly::variable(s, 4, 3));
    CHECK_THROWS_AS(plane_through(e0, e1, ProjPoint(FqVec{o, o, z, z})), GeometryError);

    MultiPoly x2 = MultiPoly::variable(s, 4, 2), x3 = MultiPoly::variable(s, 4, 3);
    LineP3 cut = planes_meet(PlaneP3(x3), PlaneP3(x2));
    CHECK(cut == LineP3(e0, e1));
    CHECK_THROWS_AS(planes_meet(PlaneP3(x3), PlaneP3(x3)), GeometryError);
}

TEST_CASE("plane membership matches form evaluation on samples") {
    FieldSpec s(8);
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        ProjPoint a = random_point(s, rng), b = random_point(s, rng), c = random_point(s, rng);
        FqMat m{a.coords(), b.coords(), c.coords()};
        if (rank(std::move(m)) != 3) continue;
        PlaneP3 pl = plane_through(a, b, c);
        CHECK(pl.contains(a));
        CHECK(pl.contains(b));
        CHECK(pl.contains(c));
        ProjPoint x = random_point(s, rng);
        CHECK(pl.contains(x) == pl.form().eval(x.coords()).is_zero());
    }
}

TEST_CASE("restriction to a line") {
    FieldSpec s(2);
    Fq z = Fq::zero(s), o = Fq::one(s);
    LineP3 l(ProjPoint(FqVec{o, z, z, z}), ProjPoint(FqVec{z, o, z, z}));
    MultiPoly x0 = MultiPoly::variable(s, 4, 0), x3 = MultiPoly::variable(s, 4, 3);
    CHECK(restrict_to_line(x3, l).is_zero());
    CHECK(restrict_to_line(x0, l) == MultiPoly::variable(s, 2, 0));
    CHECK(line_on_surface(x3 * x3, l));
    // a line lies on a surface iff every point of it does (checked over GF(4))
    FieldSpec s4(2);
    Rng rng(44);
    MultiPoly f(s4, 4);
    f.add_term(Expo{1, 1, 0, 0}, Fq::one(s4));
    f.add_term(Expo{0, 0, 1, 1}, Fq::one(s4));
    for (int i = 0; i < 100; ++i) {
        LineP3 rl = random_line(s4, rng);
        bool all_on = true;
        for (uint64_t t = 0; t < 4 && all_on; ++t)
            all_on &= f.eval(rl.at(Fq::one(s4), Fq(s4, t)).coords()).is_zero();
        all_on &= f.eval(rl.at(Fq::zero(s4), Fq::one(s4)).coords()).is_zero();
        CHECK(line_on_surface(f, rl) == all_on);
    }
}

TEST_CASE("general position of six points") {
    // note: with the coordinate frame and unit point fixed, the sixth point
    // needs four pairwise-distinct nonzero coordinates, so GF(4) is too small
    // and GF(8) is the first field where this succeeds
    FieldSpec s(3);
    Fq z = Fq::zero(s), o = Fq::one(s), w(s, 2), w2 = w * w;
    std::vector<ProjPoint> pts{
        ProjPoint(FqVec{o, z, z, z}), ProjPoint(FqVec{z, o, z, z}),
        ProjPoint(FqVec{z, z, o, z}), ProjPoint(FqVec{z, z, z, o}),
        ProjPoint(FqVec{o, o, o, o}), ProjPoint(FqVec{o, w, w2, w2 + w})};
    CHECK(general_position6(pts));
    auto bad = pts;
    bad[5] = pts[4];
    CHECK(!general_position6(bad));
    bad[5] = ProjPoint(FqVec{z, o, o, z});  // coplanar with p1, p2, p3
    CHECK(!general_position6(bad));
}
