#pragma once

#include <vector>

#include "kbchroma/poly.hpp"

namespace kbchroma {

// prod_{t=0}^{k-1} (q - t) as a polynomial; k = 0 gives 1.
RationalPoly falling_factorial_poly(unsigned k);

// prod_{t=0}^{k-1} (q - offset - t).
RationalPoly falling_factorial_poly_from(long offset, unsigned k);

/// The basis functions f_i(b,q): alternating binomial sums of falling
/// factorials. Degree b-i with unit leading coefficient for i <= b; the
/// zero polynomial when b < i.
RationalPoly f_basis(int b, int i);

/// An eigenvalue written as an integer combination of f_d(b,q)..f_b(b,q).
/// weights[k] multiplies f_{d+k}(b,q). The expansion has degree b-d and
/// leading coefficient (-1)^d.
struct FBasisVector {
    int b = 0;
    int d = 0;
    std::vector<long> weights;

    long weight_on(int i) const {  // weight on f_i(b,q)
        int k = i - d;
        if (k < 0 || k >= static_cast<int>(weights.size())) return 0;
        return weights[k];
    }

    RationalPoly expand() const;

    bool operator==(const FBasisVector& o) const;
};

}  // namespace kbchroma
