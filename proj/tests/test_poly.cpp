#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kbchroma/apfloat.hpp"
#include "kbchroma/fbasis.hpp"
#include "kbchroma/poly.hpp"
#include "test_util.hpp"

using namespace kbchroma;
using namespace kbchroma::testutil;

namespace {

RationalPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(0, 6);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 7);
    std::vector<Rational> c(deg(rng) + 1);
    for (auto& x : c) x = make_rational(num(rng), den(rng));
    return RationalPoly(std::move(c));
}

}  // namespace

TEST_CASE("construction and degree") {
    RationalPoly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);

    auto p = P({1, -9, 21});
    CHECK(p.degree() == 2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(1) == -9);
    CHECK(p.coeff(0) == 21);
    CHECK(p.coeff(5) == 0);

    // trailing zeros trimmed
    RationalPoly t(std::vector<Rational>{Rational(3), Rational(0), Rational(0)});
    CHECK(t.degree() == 0);

    CHECK((Q() - Q()).is_zero());
}

TEST_CASE("ring axioms on randomized polynomials, exact") {
    std::mt19937 rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == RationalPoly());
    }
}

TEST_CASE("pow by repeated squaring matches iterated product") {
    std::mt19937 rng(7);
    for (int iter = 0; iter < 20; ++iter) {
        auto a = random_poly(rng);
        RationalPoly prod(1);
        for (unsigned n = 0; n <= 6; ++n) {
            CHECK(a.pow(n) == prod);
            prod *= a;
        }
    }
    CHECK(RationalPoly().pow(0) == RationalPoly(1));
}

TEST_CASE("evaluation and deflation") {
    auto p = P({1, -15, 95, -325, 609, -501});  // f_0(5,q)
    CHECK(p.eval(Rational(10)) == 18089);
    CHECK(p.eval(Rational(0)) == -501);

    auto lin = L(5);
    CHECK(lin.eval(Rational(5)) == 0);
    auto prod = lin * P({1, 2, 3});
    auto back = prod.deflate(Rational(5));
    CHECK(back == P({1, 2, 3}));
    CHECK_THROWS(prod.deflate(Rational(99)));
}

TEST_CASE("falling factorial") {
    CHECK(falling_factorial_poly(0) == RationalPoly(1));
    CHECK(falling_factorial(Rational(5), 3) == 60);
    CHECK(falling_factorial_poly(2) == P({1, -1, 0}));  // q^2 - q
    CHECK(falling_factorial_poly(5).eval(Rational(5)) == 120);
}

TEST_CASE("complex evaluation") {
    auto p = L(5);
    auto z = ApComplex::from(5.0, 0.0, 128);
    auto v = eval_complex(p, z);
    CHECK(v.re.is_zero());
    CHECK(v.im.is_zero());

    auto f0 = f_basis(5, 0);
    auto at10 = eval_complex(f0, ApComplex::from(10.0, 0.0, 256));
    CHECK(at10.re.to_double() == doctest::Approx(18089).epsilon(1e-12));

    CHECK(eval_complex(RationalPoly(), ApComplex::from(2.5, -1.5, 64)).is_zero());
}

TEST_CASE("complex evaluation error bound at rational points") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 9);
    for (long prec : {64L, 128L, 256L}) {
        for (int iter = 0; iter < 25; ++iter) {
            auto p = random_poly(rng);
            Rational x = make_rational(num(rng), den(rng));
            Rational exact = p.eval(x);
            auto approx = eval_complex(p, ApComplex::from(x, prec));
            if (exact == 0) {
                CHECK(abs(approx.re).to_double() < 1e-10);
                continue;
            }
            ApFloat err = abs(approx.re - ApFloat::from(exact, prec)) / abs(ApFloat::from(exact, prec));
            CHECK(err < ldexp2(ApFloat::from(1L, prec), 8 - prec));
        }
    }
}

TEST_CASE("printing") {
    CHECK(P({1, -9, 21}).str() == "q^2 - 9*q + 21");
    CHECK(RationalPoly().str() == "0");
    CHECK((-Q()).str() == "-q");
}
