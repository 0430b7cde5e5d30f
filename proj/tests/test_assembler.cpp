#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kbchroma/assembler.hpp"
#include "kbchroma/fbasis.hpp"
#include "test_util.hpp"

using namespace kbchroma;
using namespace kbchroma::testutil;

TEST_CASE("expansion shape: integer coefficients, degree m*b, monic") {
    for (int b : {5, 6}) {
        for (Boundary bd : {Boundary::torus, Boundary::klein}) {
            const Catalog& c = catalog(b, bd);
            for (int m = 2; m <= 6; ++m) {
                auto res = assemble(c, m);
                CHECK(res.poly.has_integer_coeffs());
                CHECK(res.degree() == m * b);
                CHECK(res.poly.leading() == 1);
            }
        }
    }
    CHECK_THROWS(assemble(toroidal_catalog(5), 0));
}

TEST_CASE("chromatic number: vanishes at q = 0..b-1") {
    for (int b : {5, 6})
        for (Boundary bd : {Boundary::torus, Boundary::klein}) {
            auto res = assemble(b, bd, 3);
            for (long q = 0; q < b; ++q) CHECK(res.poly.eval(Rational(q)) == 0);
        }
}

TEST_CASE("m = 1 is formal: loops collapse the sum, except the even-b klein wrap") {
    // torus m=1 wraps every slice vertex onto itself (loops), as does the
    // odd-b klein wrap through its fixed point; the even-b klein wrap is
    // loop-free and leaves a doubled K_b
    CHECK(assemble(5, Boundary::torus, 1).poly.is_zero());
    CHECK(assemble(6, Boundary::torus, 1).poly.is_zero());
    CHECK(assemble(5, Boundary::klein, 1).poly.is_zero());
    CHECK(assemble(6, Boundary::klein, 1).poly == falling_factorial_poly(6));
}

TEST_CASE("eval_at agrees with the expansion at random rationals") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 11);
    for (int b : {5, 6})
        for (Boundary bd : {Boundary::torus, Boundary::klein}) {
            const Catalog& c = catalog(b, bd);
            auto res = assemble(c, 4);
            for (int k = 0; k < 25; ++k) {
                Rational q = make_rational(num(rng), den(rng));
                CHECK(eval_at(c, 4, q) == res.poly.eval(q));
            }
        }
}

TEST_CASE("eval_at far beyond expansion scale: below the chromatic number") {
    // m = 20 without expanding: every lambda contributes, yet the sum
    // vanishes at integers below b
    CHECK(eval_at(toroidal_catalog(5), 20, Rational(1)) == 0);
    CHECK(eval_at(toroidal_catalog(5), 20, Rational(4)) == 0);
    CHECK(eval_at(klein_catalog(6), 12, Rational(3)) == 0);
}

TEST_CASE("eval_at at a complex point tracks the exact expansion") {
    const Catalog& c = toroidal_catalog(5);
    auto res = assemble(c, 3);
    ApComplex q = ApComplex::from(1.25, -0.5, 256);
    ApComplex direct = eval_at(c, 3, q);
    ApComplex expanded = eval_complex(res.poly, q);
    CHECK(abs(direct - expanded).to_double() < 1e-40);
}

TEST_CASE("coefficient sums") {
    CHECK(coefficient_sum(toroidal_catalog(5)) == falling_factorial_poly(5));  // P(K_5, q)
    CHECK(coefficient_sum(toroidal_catalog(6)) == falling_factorial_poly(6));  // P(K_6, q)
    CHECK(coefficient_sum(klein_catalog(5)).is_zero());
    CHECK(coefficient_sum(klein_catalog(6)).is_zero());
}

TEST_CASE("klein level sums against the closed forms") {
    for (int b : {5, 6})
        for (int d = 0; d <= b; ++d) {
            auto ls = klein_level_sum(b, d);
            CHECK(ls.matches);
        }
    // spot values
    CHECK(klein_level_sum(6, 2).sum == RationalPoly(-3));
    CHECK(klein_level_sum(6, 1).sum.is_zero());
    CHECK(klein_level_sum(5, 1).sum == L(1));
    CHECK(klein_level_sum(5, 2).sum == RationalPoly(-2));
    CHECK(klein_level_sum(6, 6).sum == RationalPoly(-1));
    CHECK(klein_level_sum(5, 4).sum == RationalPoly(1));
}
