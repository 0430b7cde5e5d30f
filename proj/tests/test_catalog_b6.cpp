#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbchroma/catalog.hpp"
#include "test_util.hpp"

using namespace kbchroma;
using namespace kbchroma::testutil;

namespace {
const Catalog& cat() { return toroidal_catalog(6); }
}

TEST_CASE("family shape") {
    CHECK(cat().family.b == 6);
    CHECK(cat().family.per_d_counts == std::vector<int>{1, 2, 5, 10, 16, 11, 1});
    CHECK(cat().family.total_lambda_count == 46);
    CHECK(cat().family.contributing_count == 46);
}

TEST_CASE("eigenvalue expansions, levels 0-2") {
    CHECK(cat().at(0, 1).lambda_poly == P({1, -21, 190, -965, 2944, -5155, 4051}));
    CHECK(cat().at(1, 1).lambda_poly == P({-1, 25, -255, 1335, -3609, 4051}));
    CHECK(cat().at(1, 2).lambda_poly == -(L(5) * P({1, -14, 77, -200, 209})));
    CHECK(cat().at(2, 1).lambda_poly == P({1, -26, 257, -1148, 1961}));
    CHECK(cat().at(2, 2).lambda_poly == P({1, -20, 149, -488, 587}));
    CHECK(cat().at(2, 3).lambda_poly == P({1, -16, 97, -268, 291}));
    CHECK(cat().at(2, 4).lambda_poly == P({1, -22, 185, -708, 1045}));
    CHECK(cat().at(2, 5).lambda_poly == P({1, -16, 95, -246, 229}));
}

TEST_CASE("eigenvalue expansions, level 3") {
    CHECK(cat().at(3, 1).lambda_poly == P({-1, 24, -194, 529}));
    CHECK(cat().at(3, 2).lambda_poly == P({-1, 18, -104, 187}));
    CHECK(cat().at(3, 3).lambda_poly == P({-1, 14, -64, 99}));
    CHECK(cat().at(3, 4).lambda_poly == P({-1, 12, -50, 73}));
    CHECK(cat().at(3, 5).lambda_poly == P({-1, 21, -149, 358}));
    CHECK(cat().at(3, 6).lambda_poly == -(L(6) * P({1, -11, 31})));
    CHECK(cat().at(3, 7).lambda_poly == P({-1, 15, -71, 100}));
    CHECK(cat().at(3, 8).lambda_poly == P({-1, 12, -47, 61}));
    CHECK(cat().at(3, 9).lambda_poly == P({-1, 18, -110, 229}));
    CHECK(cat().at(3, 10).lambda_poly == P({-1, 12, -44, 43}));
}

TEST_CASE("eigenvalue expansions, level 4") {
    CHECK(cat().at(4, 1).lambda_poly == P({1, -19, 91}));
    CHECK(cat().at(4, 2).lambda_poly == P({1, -13, 37}));
    CHECK(cat().at(4, 3).lambda_poly == P({1, -9, 21}));
    CHECK(cat().at(4, 4).lambda_poly == P({1, -11, 25}));
    CHECK(cat().at(4, 5).lambda_poly == P({1, -13, 41}));
    CHECK(cat().at(4, 6).lambda_poly == P({1, -11, 31}));
    CHECK(cat().at(4, 7).lambda_poly == L(4) * L(4));
    CHECK(cat().at(4, 8).lambda_poly == P({1, -17, 73}));
    CHECK(cat().at(4, 9).lambda_poly == P({1, -10, 22}));
    CHECK(cat().at(4, 10).lambda_poly == P({1, -7, 13}));
    CHECK(cat().at(4, 11).lambda_poly == P({1, -15, 57}));
    CHECK(cat().at(4, 12).lambda_poly == P({1, -9, 15}));
    CHECK(cat().at(4, 13).lambda_poly == L(6) * L(6));
    CHECK(cat().at(4, 14).lambda_poly == P({1, -7, 11}));
    CHECK(cat().at(4, 15).lambda_poly == P({1, -13, 43}));
    CHECK(cat().at(4, 16).lambda_poly == P({1, -7, 7}));
}

TEST_CASE("eigenvalue expansions, levels 5-6") {
    const long shifts[] = {11, 5, 10, 6, 4, 9, 7, 3, 8, 2, 1};
    for (int j = 1; j <= 11; ++j) CHECK(cat().at(5, j).lambda_poly == -L(shifts[j - 1]));
    CHECK(cat().at(6, 1).lambda_poly == RationalPoly(1));
}

TEST_CASE("degree law and f-basis consistency") {
    for (const auto& e : cat().entries) {
        CHECK(e.lambda_poly.degree() == 6 - e.d);
        CHECK(e.lambda_poly.leading() == (e.d % 2 ? -1 : 1));
        CHECK(e.lambda.expand() == e.lambda_poly);
        CHECK(e.coeff_poly.degree() == e.d);
        CHECK(e.contributing);
    }
}

TEST_CASE("coefficients, levels 0-2") {
    CHECK(cat().at(0, 1).coeff_poly == RationalPoly(1));
    CHECK(cat().at(1, 1).coeff_poly == L(1));
    CHECK(cat().at(1, 2).coeff_poly == Rational(5) * L(1));
    CHECK(cat().at(2, 1).coeff_poly == fr(1, 2) * Q() * L(3));
    CHECK(cat().at(2, 2).coeff_poly == fr(5, 2) * Q() * L(3));
    CHECK(cat().at(2, 3).coeff_poly == fr(9, 2) * Q() * L(3));
    CHECK(cat().at(2, 4).coeff_poly == fr(5, 2) * L(1) * L(2));
    CHECK(cat().at(2, 5).coeff_poly == Rational(5) * L(1) * L(2));
}

TEST_CASE("coefficients, level 3") {
    CHECK(cat().at(3, 1).coeff_poly == fr(1, 6) * Q() * L(1) * L(5));
    CHECK(cat().at(3, 2).coeff_poly == fr(5, 6) * Q() * L(1) * L(5));
    CHECK(cat().at(3, 3).coeff_poly == fr(3, 2) * Q() * L(1) * L(5));
    CHECK(cat().at(3, 4).coeff_poly == fr(5, 6) * Q() * L(1) * L(5));
    CHECK(cat().at(3, 5).coeff_poly == fr(5, 3) * Q() * L(2) * L(4));
    CHECK(cat().at(3, 6).coeff_poly == Rational(3) * Q() * L(2) * L(4));
    CHECK(cat().at(3, 7).coeff_poly == fr(10, 3) * Q() * L(2) * L(4));
    CHECK(cat().at(3, 8).coeff_poly == fr(16, 3) * Q() * L(2) * L(4));
    CHECK(cat().at(3, 9).coeff_poly == fr(5, 3) * L(1) * L(2) * L(3));
    CHECK(cat().at(3, 10).coeff_poly == fr(5, 3) * L(1) * L(2) * L(3));
}

TEST_CASE("coefficients, level 4") {
    CHECK(cat().at(4, 1).coeff_poly == fr(1, 24) * Q() * L(1) * L(2) * L(7));
    CHECK(cat().at(4, 2).coeff_poly == fr(5, 24) * Q() * L(1) * L(2) * L(7));
    CHECK(cat().at(4, 3).coeff_poly == fr(3, 8) * Q() * L(1) * L(2) * L(7));
    CHECK(cat().at(4, 4).coeff_poly == fr(5, 4) * Q() * L(1) * L(3) * L(6));
    CHECK(cat().at(4, 5).coeff_poly == fr(9, 8) * Q() * L(1) * L(3) * L(6));
    CHECK(cat().at(4, 6).coeff_poly == fr(5, 8) * Q() * L(1) * L(3) * L(6));
    CHECK(cat().at(4, 7).coeff_poly == Rational(2) * Q() * L(1) * L(3) * L(6));
    CHECK(cat().at(4, 8).coeff_poly == fr(5, 8) * Q() * L(1) * L(3) * L(6));
    CHECK(cat().at(4, 9).coeff_poly == fr(4, 3) * Q() * L(1) * L(4) * L(5));
    CHECK(cat().at(4, 10).coeff_poly == fr(5, 12) * Q() * L(1) * L(4) * L(5));
    CHECK(cat().at(4, 11).coeff_poly == fr(1, 2) * Q() * L(5) * P({2, -3}) * P({2, -7}));
    CHECK(cat().at(4, 12).coeff_poly == fr(5, 4) * Q() * L(2) * L(3) * L(5));
    CHECK(cat().at(4, 13).coeff_poly == Rational(2) * Q() * L(2) * L(3) * L(5));
    CHECK(cat().at(4, 14).coeff_poly == fr(9, 8) * Q() * L(2) * L(3) * L(5));
    CHECK(cat().at(4, 15).coeff_poly == fr(5, 12) * L(1) * L(2) * L(3) * L(4));
    CHECK(cat().at(4, 16).coeff_poly == fr(5, 24) * L(1) * L(2) * L(3) * L(4));
}

TEST_CASE("coefficients, levels 5-6") {
    CHECK(cat().at(5, 1).coeff_poly == fr(1, 120) * Q() * L(1) * L(2) * L(3) * L(9));
    CHECK(cat().at(5, 2).coeff_poly == fr(1, 4) * Q() * L(1) * L(3) * L(4) * L(7));
    CHECK(cat().at(5, 3).coeff_poly == fr(1, 6) * Q() * L(1) * L(2) * L(4) * L(8));
    CHECK(cat().at(5, 4).coeff_poly == fr(1, 5) * Q() * L(4) * P({7, -77, 217, -162}));
    CHECK(cat().at(5, 5).coeff_poly == Q() * L(1) * L(2) * P({1, -12, 34}));
    CHECK(cat().at(5, 6).coeff_poly == fr(1, 8) * Q() * L(1) * L(7) * P({7, -49, 78}));
    CHECK(cat().at(5, 7).coeff_poly == fr(1, 4) * L(1) * L(2) * L(5) * P({1, -7, 2}));
    CHECK(cat().at(5, 8).coeff_poly == fr(1, 8) * Q() * L(1) * L(3) * P({7, -77, 202}));
    CHECK(cat().at(5, 9).coeff_poly == Q() * L(3) * L(6) * P({1, -6, 6}));
    CHECK(cat().at(5, 10).coeff_poly == fr(1, 6) * Q() * L(2) * L(3) * L(4) * L(6));
    CHECK(cat().at(5, 11).coeff_poly == fr(1, 120) * L(1) * L(2) * L(3) * L(4) * L(5));
    CHECK(cat().at(6, 1).coeff_poly == P({1, -21, 160, -545, 814, -415, 1}));
}

TEST_CASE("degenerate-row partition sums and the (4,11) example") {
    for (const auto& e : cat().entries) {
        if (e.partitions.size() < 2) continue;
        RationalPoly sum;
        for (const auto& t : e.partitions) sum += coeff_c(t.x) * Rational(t.cprime);
        CHECK(sum == e.coeff_poly);
    }
    const auto& r11 = cat().at(4, 11);
    CHECK(r11.cprime_for({3, 1}) == 0);
    CHECK(r11.cprime_for({2, 2}) == 18);
    CHECK(r11.cprime_for({2, 1, 1}) == 30);
    const auto& r54 = cat().at(5, 4);
    CHECK(r54.partitions.size() == 3);
    CHECK(r54.cprime_for({3, 1, 1}) == 96);
}

TEST_CASE("alternating family matches the j = 1 column") {
    for (int d = 0; d <= 6; ++d)
        CHECK(general_lambda_alternating(6, d).expand() == cat().at(d, 1).lambda_poly);
}

TEST_CASE("[21] family at b = 6") {
    auto fam = lambda21_family(6);
    CHECK(fam[0].lambda.expand() == cat().at(3, 5).lambda_poly);
    CHECK(fam[1].lambda.expand() == cat().at(3, 6).lambda_poly);
    CHECK(fam[2].lambda.expand() == cat().at(3, 7).lambda_poly);
    CHECK(fam[3].lambda.expand() == cat().at(3, 8).lambda_poly);
    CHECK(fam[0].cprime == 10);
    CHECK(fam[1].cprime == 18);
    CHECK(fam[2].cprime == 20);
    CHECK(fam[3].cprime == 32);
}
