#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kbchroma/apfloat.hpp"
#include "kbchroma/catalog.hpp"
#include "kbchroma/report.hpp"

namespace kbchroma {

/// Magnitude ranking of all catalog eigenvalues at one complex point.
/// Ties are broken by (d, j) order and flagged.
struct DominanceSample {
    std::vector<ApFloat> magnitudes;  // parallel to catalog entries
    int dominant_index = -1;          // index into catalog entries
    int runner_up_index = -1;
    std::pair<int, int> dominant_dj{-1, -1};
    std::pair<int, int> runner_up_dj{-1, -1};
    double relative_gap = 0;  // (|l1| - |l2|) / |l1|
    bool tie = false;
};

DominanceSample dominance_at(int b, const ApComplex& q);

/// Exact version on the real axis: magnitudes are rationals, comparisons
/// are decided in exact arithmetic.
struct DominanceSampleExact {
    std::vector<Rational> magnitudes;
    int dominant_index = -1;
    int runner_up_index = -1;
    std::pair<int, int> dominant_dj{-1, -1};
    Rational gap;  // |l1| - |l2|, exact
    bool tie = false;
};

DominanceSampleExact dominance_at_rational(int b, const Rational& q);

/// Largest real point where the top-two eigenvalue magnitudes tie, found by
/// exact-arithmetic bisection of |lambda_{0,1}| - |lambda_{3,1}| and
/// cross-checked as a root of the degree-5 resolvent.
struct QcResult {
    double qc = 0;
    double quintic_residual = 0;      // |p(qc)| on the resolvent
    double quintic_residual_rel = 0;  // relative to the term magnitudes
};
QcResult qc_solve(int b);

/// The degree-5 resolvent whose largest real root is q_c.
const RationalPoly& qc_quintic(int b);

/// Real-axis dominance scan: every point where the dominant eigenvalue
/// changes, refined by exact bisection, plus the dominant (d, j) per
/// interval between consecutive changes.
struct RealInterval {
    double lo = 0, hi = 0;
    std::pair<int, int> dominant_dj{-1, -1};
};
struct CrossingScan {
    std::vector<double> crossings;
    std::vector<RealInterval> intervals;
};
CrossingScan real_axis_crossings(int b, double lo, double hi, double tol = 1e-9);

/// Accumulation-locus trace: grid scan of the dominance map over a complex
/// window; every edge where the dominant index flips is refined by bisection
/// until the top-two magnitudes tie within tol.
struct LocusPoint {
    double re = 0, im = 0;
    double gap = 0;  // relative gap after refinement
    int d = 0, j = 0;
    int multiplicity = 2;  // eigenvalues sharing the max magnitude at this point
};
struct Window {
    double re_lo = 0, re_hi = 0, im_lo = 0, im_hi = 0;
};
struct LocusTrace {
    Window window;
    int resolution = 0;
    double tol = 0;
    std::vector<LocusPoint> points;
};
LocusTrace trace_locus(int b, const Window& w, int resolution, double tol = 1e-9,
                       long precision = 256, int threads = 1);

/// Ground-state degeneracy per site |dominant lambda(q)|^(1/b); only defined
/// on the analytic interval q > q_c.
ApFloat w_function(int b, const Rational& q, long precision = 256);

/// Level-(b-1) eigenvalues are exactly (-1)^(b-1)(q - c) for c = 1..2b-1,
/// with both extremes attained.
Report verify_theorem1(int b);

/// On the negative real axis lambda_{0,1} strictly dominates everything,
/// with an exact two-way tie against lambda_{1,1} at q = 0; per level the
/// dominant eigenvalue is the alternating family.
Report verify_theorem2(int b);

/// f_i(b,q) >= 0 for q >= b; the principal family is strictly ordered for
/// q > b; q_c(b) < b for b = 5, 6 and q_c in (b-1, b).
Report verify_theorem3(int b_lo = 4, int b_hi = 10);

/// Real-axis crossings equal {0, 2, 4, ..., 2 floor((b-1)/2), q_c} within
/// tol, and the dominant eigenvalue between consecutive crossings below q_c
/// is the level-d' alternating family (d', 1).
Report verify_crossings(int b, double tol = 1e-6);

/// The [21] eigenvalue quadruple matches the catalog entries, as sets,
/// together with their c' multiplicities.
Report verify_lambda21(int b);

/// Torus -> Klein c' transformation table plus its closed-form versions for
/// the [d] and [1^d] partition families.
Report verify_klein_transform_conjectures(int b);

/// Klein per-level coefficient sums against their conjectured closed forms.
Report verify_level_sums(int b);

}  // namespace kbchroma
