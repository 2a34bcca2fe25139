// Field arithmetic over GF(2^k): construction, axioms, and the named special
// maps (inverse, square root, Frobenius), checked against brute force.

#include <catch2/catch_amalgamated.hpp>

#include "k3k/gf2k.hpp"
#include "k3k/rng.hpp"

using namespace k3k;

TEST_CASE("field construction and moduli") {
    CHECK(FieldSpec(1).order() == 2);
    CHECK(FieldSpec(2).modulus() == 0b111);  // x^2 + x + 1, the only choice
    CHECK(FieldSpec(4).order() == 16);
    CHECK(FieldSpec(8, 0x11b).modulus() == 0x11b);
    CHECK_THROWS_AS(FieldSpec(4, 0b1011), ModulusError);  // degree mismatch
    CHECK_THROWS_AS(FieldSpec(4, 0b10001), ModulusError);  // x^4+1 reducible

    // every default modulus is irreducible by the built-in test
    for (int k = 1; k <= 12; ++k) {
        FieldSpec s(k);
        CHECK(detail::is_irreducible(s.modulus(), k));
    }
}

TEST_CASE("irreducibility test against root counting") {
    // a cubic or quadratic over F2 is irreducible iff it has no root in F2
    for (uint64_t m = 0b100; m < 0b1000; ++m) {
        bool root0 = (m & 1) == 0;
        bool root1 = __builtin_popcountll(m) % 2 == 0;
        CHECK(detail::is_irreducible(m, 2) == (!root0 && !root1));
    }
}

TEST_CASE("prime field arithmetic") {
    FieldSpec s(1);
    Fq o = Fq::one(s);
    CHECK((o + o).is_zero());
    CHECK(o * o == o);
    CHECK(o.inv() == o);
    CHECK(o.sqrt() == o);
}

TEST_CASE("GF(4) multiplication table facts") {
    FieldSpec s(2);
    Fq w(s, 0b10);           // a root of x^2 + x + 1
    Fq w1(s, 0b11);          // w + 1
    CHECK(w * w == w1);      // w^2 = w + 1
    CHECK(w * w1 == Fq::one(s));
    CHECK(w.sqrt() == w1);   // (w+1)^2 = w^2 + 1 = w
}

TEST_CASE("field axioms on random samples") {
    for (int k : {1, 2, 4, 8}) {
        FieldSpec s(k);
        Rng rng(99 + uint64_t(k));
        Fq o = Fq::one(s);
        for (int i = 0; i < 200; ++i) {
            Fq a = rng.element(s), b = rng.element(s), c = rng.element(s);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a + a).is_zero());
            CHECK(a * o == a);
            // Frobenius is additive
            CHECK((a + b) * (a + b) == a * a + b * b);
            if (!a.is_zero()) {
                CHECK(a * a.inv() == o);
                CHECK(a.sqrt() * a.sqrt() == a);
            }
        }
    }
}

TEST_CASE("inverse and square root by exhaustion over GF(16)") {
    FieldSpec s(4);
    CHECK_THROWS_AS(Fq::zero(s).inv(), DivisionByZero);
    CHECK(Fq::zero(s).sqrt().is_zero());
    for (uint64_t a = 1; a < 16; ++a) {
        Fq x(s, a);
        // brute-force inverse
        Fq found = Fq::zero(s);
        for (uint64_t b = 1; b < 16; ++b)
            if (x * Fq(s, b) == Fq::one(s)) found = Fq(s, b);
        CHECK(x.inv() == found);
        // sqrt is the unique square root (squaring is a bijection)
        int preimages = 0;
        for (uint64_t b = 0; b < 16; ++b)
            if (Fq(s, b) * Fq(s, b) == x) ++preimages;
        CHECK(preimages == 1);
    }
}

TEST_CASE("pow against repeated multiplication") {
    FieldSpec s(8);
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Fq a = rng.nonzero(s);
        Fq acc = Fq::one(s);
        for (int e = 0; e <= 20; ++e) {
            CHECK(a.pow(uint64_t(e)) == acc);
            acc = acc * a;
        }
        // Lagrange: a^(q-1) = 1
        CHECK(a.pow(s.order() - 1) == Fq::one(s));
    }
}

TEST_CASE("element parsing and spec mismatch") {
    FieldSpec s4(4), s2(2);
    CHECK(Fq::parse_hex(s4, "0xb").bits() == 0xb);
    CHECK_THROWS(Fq::parse_hex(s2, "0x7"));  // out of range
    CHECK_THROWS_AS(Fq(s4, 3) + Fq(s2, 3), SpecMismatch);
}
