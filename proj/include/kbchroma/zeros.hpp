#pragma once

#include <vector>

#include "kbchroma/apfloat.hpp"
#include "kbchroma/assembler.hpp"
#include "kbchroma/catalog.hpp"

namespace kbchroma {

struct RootRecord {
    ApComplex z;
    ApFloat residual;         // |P(z)|, evaluated through the product form
    ApFloat residual_newton;  // |P(z)| / |P'(z)|, the local error scale
    int multiplicity = 1;
    bool converged = true;
    bool exact_integer = false;  // deflated root 0..b-1, residual exactly 0
};

struct ZeroSet {
    FamilySpec family;
    int m = 0;
    long precision = 256;
    int degree = 0;  // m*b, root count with multiplicity
    std::vector<RootRecord> roots;

    double max_newton_residual() const;
    bool all_converged() const;
};

/// All chromatic zeros of the m-slice chain: the integer roots 0..b-1 are
/// deflated exactly first, the rest come from Aberth-Ehrlich simultaneous
/// iteration on the exact integer-coefficient expansion, carried out at the
/// requested precision. Deterministic: fixed initial configuration, fixed
/// sweep order. Roots are sorted by (re, im); clusters closer than 1e-10
/// are merged into one record with a multiplicity count.
ZeroSet find_zeros(const Catalog& cat, int m, long precision = 256, int max_iters = 400);
ZeroSet find_zeros(int b, Boundary boundary, int m, long precision = 256, int max_iters = 400);

/// True iff every root has Re(z) >= -epsilon; offending roots listed.
struct SupportCheck {
    bool ok = true;
    double min_re = 0;
    std::vector<size_t> offending;
};
SupportCheck zero_support_check(const ZeroSet& zs, double epsilon);

/// One-sided distance from the non-real roots of zs to a point cloud.
double one_sided_distance(const ZeroSet& zs, const std::vector<std::pair<double, double>>& cloud);

}  // namespace kbchroma
