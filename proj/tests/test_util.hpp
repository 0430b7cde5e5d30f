#pragma once

#include "kbchroma/poly.hpp"
#include "kbchroma/rational.hpp"

namespace kbchroma::testutil {

// Integer coefficients from the leading term down, as printed.
inline RationalPoly P(std::initializer_list<long> coeffs) {
    return RationalPoly::descending(coeffs);
}

inline RationalPoly Q() { return RationalPoly::variable(); }
inline RationalPoly L(long a) { return Q() - RationalPoly(a); }
inline Rational fr(long n, long d) { return make_rational(n, d); }

}  // namespace kbchroma::testutil
