#pragma once

#include <vector>

#include "test_util.hpp"

namespace kbchroma::testutil {

struct LambdaFixture {
    int d, j;
    RationalPoly poly;
};

// The 27 explicit eigenvalue polynomials of the width-5 torus chain.
inline std::vector<LambdaFixture> lambda_fixtures_b5() {
    return {
        {0, 1, P({1, -15, 95, -325, 609, -501})},
        {1, 1, P({-1, 18, -125, 400, -501})},
        {1, 2, -(L(4) * P({1, -9, 29, -34}))},
        {2, 1, P({1, -18, 110, -229})},
        {2, 2, P({1, -13, 55, -74})},
        {2, 3, P({1, -10, 34, -41})},
        {2, 4, P({1, -15, 77, -136})},
        {2, 5, P({1, -10, 32, -31})},
        {3, 1, P({-1, 15, -57})},
        {3, 2, P({-1, 10, -22})},
        {3, 3, P({-1, 7, -13})},
        {3, 4, P({-1, 13, -43})},
        {3, 5, -(L(5) * L(5))},
        {3, 6, P({-1, 8, -13})},
        {3, 7, -(L(3) * L(3))},
        {3, 8, P({-1, 11, -31})},
        {3, 9, P({-1, 6, -6})},
        {4, 1, L(9)},
        {4, 2, L(4)},
        {4, 3, L(8)},
        {4, 4, L(2)},
        {4, 5, L(3)},
        {4, 6, L(5)},
        {4, 7, L(7)},
        {4, 8, L(6)},
        {4, 9, L(1)},
        {5, 1, RationalPoly(-1)},
    };
}

// The 46 explicit eigenvalue polynomials of the width-6 torus chain.
inline std::vector<LambdaFixture> lambda_fixtures_b6() {
    return {
        {0, 1, P({1, -21, 190, -965, 2944, -5155, 4051})},
        {1, 1, P({-1, 25, -255, 1335, -3609, 4051})},
        {1, 2, -(L(5) * P({1, -14, 77, -200, 209}))},
        {2, 1, P({1, -26, 257, -1148, 1961})},
        {2, 2, P({1, -20, 149, -488, 587})},
        {2, 3, P({1, -16, 97, -268, 291})},
        {2, 4, P({1, -22, 185, -708, 1045})},
        {2, 5, P({1, -16, 95, -246, 229})},
        {3, 1, P({-1, 24, -194, 529})},
        {3, 2, P({-1, 18, -104, 187})},
        {3, 3, P({-1, 14, -64, 99})},
        {3, 4, P({-1, 12, -50, 73})},
        {3, 5, P({-1, 21, -149, 358})},
        {3, 6, -(L(6) * P({1, -11, 31}))},
        {3, 7, P({-1, 15, -71, 100})},
        {3, 8, P({-1, 12, -47, 61})},
        {3, 9, P({-1, 18, -110, 229})},
        {3, 10, P({-1, 12, -44, 43})},
        {4, 1, P({1, -19, 91})},
        {4, 2, P({1, -13, 37})},
        {4, 3, P({1, -9, 21})},
        {4, 4, P({1, -11, 25})},
        {4, 5, P({1, -13, 41})},
        {4, 6, P({1, -11, 31})},
        {4, 7, L(4) * L(4)},
        {4, 8, P({1, -17, 73})},
        {4, 9, P({1, -10, 22})},
        {4, 10, P({1, -7, 13})},
        {4, 11, P({1, -15, 57})},
        {4, 12, P({1, -9, 15})},
        {4, 13, L(6) * L(6)},
        {4, 14, P({1, -7, 11})},
        {4, 15, P({1, -13, 43})},
        {4, 16, P({1, -7, 7})},
        {5, 1, -L(11)},
        {5, 2, -L(5)},
        {5, 3, -L(10)},
        {5, 4, -L(6)},
        {5, 5, -L(4)},
        {5, 6, -L(9)},
        {5, 7, -L(7)},
        {5, 8, -L(3)},
        {5, 9, -L(8)},
        {5, 10, -L(2)},
        {5, 11, -L(1)},
        {6, 1, RationalPoly(1)},
    };
}

}  // namespace kbchroma::testutil
