#include "kbchroma/fbasis.hpp"

#include <stdexcept>

namespace kbchroma {

RationalPoly falling_factorial_poly(unsigned k) { return falling_factorial_poly_from(0, k); }

RationalPoly falling_factorial_poly_from(long offset, unsigned k) {
    RationalPoly r(1);
    const RationalPoly q = RationalPoly::variable();
    for (unsigned t = 0; t < k; ++t) r *= q - RationalPoly(offset + long(t));
    return r;
}

RationalPoly f_basis(int b, int i) {
    if (b < 1 || i < 0) throw std::invalid_argument("f_basis: need b >= 1 and i >= 0");
    if (b < i) return {};
    RationalPoly sum;
    for (int s = 0; s <= b - i; ++s) {
        RationalPoly term = falling_factorial_poly_from(i + s, unsigned(b - i - s));
        Rational w(binomial(unsigned(b - i), unsigned(s)));
        if (s % 2) w = -w;
        sum += term * w;
    }
    return sum;
}

RationalPoly FBasisVector::expand() const {
    RationalPoly sum;
    for (size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0) continue;
        sum += f_basis(b, d + int(k)) * Rational(weights[k]);
    }
    return sum;
}

bool FBasisVector::operator==(const FBasisVector& o) const {
    if (b != o.b || d != o.d) return false;
    size_t n = std::max(weights.size(), o.weights.size());
    for (size_t k = 0; k < n; ++k) {
        long a = k < weights.size() ? weights[k] : 0;
        long c = k < o.weights.size() ? o.weights[k] : 0;
        if (a != c) return false;
    }
    return true;
}

}  // namespace kbchroma
