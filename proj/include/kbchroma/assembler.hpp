#pragma once

#include "kbchroma/apfloat.hpp"
#include "kbchroma/catalog.hpp"
#include "kbchroma/report.hpp"

namespace kbchroma {

/// Fully expanded chromatic polynomial for an m-slice chain.
struct ChromaticResult {
    FamilySpec family;
    int m = 0;
    RationalPoly poly;  // integer coefficients; degree m*b for m >= 2
    int degree() const { return poly.degree(); }
};

/// Expand sum over catalog rows of coeff_poly * lambda^m. The d! denominators
/// must cancel in the sum; a non-integer result means a transcription bug and
/// throws. m = 1 is formal: the torus wrap (and the odd-b klein wrap) puts a
/// loop on the single slice and the sum collapses to zero; the even-b klein
/// wrap is loop-free and the sum reduces to the one-slice coloring count.
ChromaticResult assemble(const Catalog& cat, int m);
ChromaticResult assemble(int b, Boundary boundary, int m);

/// Evaluate sum coeff(q) * lambda(q)^m without expanding in q. Exact for
/// rational q; agrees with assemble(...).poly evaluated at q.
Rational eval_at(const Catalog& cat, int m, const Rational& q);
ApComplex eval_at(const Catalog& cat, int m, const ApComplex& q);

/// Sum of all coefficients. Equals the one-slice coloring count
/// q(q-1)...(q-b+1) for the torus and vanishes for the Klein bottle.
RationalPoly coefficient_sum(const Catalog& cat);

/// Sum of the Klein coefficients at one level d, with the conjectured closed
/// form: for even b a pure binomial constant (zero at odd d); for odd b a
/// (q-1)-weighted binomial at odd d.
struct LevelSum {
    RationalPoly sum;
    RationalPoly conjectured;
    bool matches = false;
};
LevelSum klein_level_sum(int b, int d);

/// Structural identities of the catalogs: per-level counts, degree law,
/// coefficient sums, torus/klein eigenvalue alignment, alternating-family
/// match, degenerate-row consistency, m = 1 collapse.
Report verify_identities(int b);

}  // namespace kbchroma
