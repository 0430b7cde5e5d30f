#pragma once

#include <string>
#include <vector>

#include "kbchroma/fbasis.hpp"
#include "kbchroma/partitions.hpp"
#include "kbchroma/poly.hpp"

namespace kbchroma {

enum class Boundary { torus, klein };

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

struct PartitionTerm {
    Partition x;
    long cprime = 0;
};

/// One catalog row: the eigenvalue at a given level d with its coefficient
/// polynomial c(q)*c'. Rows whose coefficient vanishes identically are kept
/// with contributing = false so the torus and Klein catalogs stay aligned
/// row for row.
struct SpectrumEntry {
    int d = 0;
    int j = 0;
    FBasisVector lambda;
    RationalPoly lambda_poly;  // expansion of lambda over the f basis
    std::vector<PartitionTerm> partitions;
    RationalPoly coeff_poly;  // full c*c', summed over degenerate partitions
    bool contributing = true;

    long cprime_for(const Partition& x) const;  // 0 when x is absent
};

struct FamilySpec {
    int b = 0;
    Boundary boundary = Boundary::torus;
    int chromatic_number = 0;        // = b
    std::vector<int> per_d_counts;   // catalog rows per level d = 0..b
    int total_lambda_count = 0;      // sum of per_d_counts
    int contributing_count = 0;      // rows with nonzero coefficient
};

struct Catalog {
    FamilySpec family;
    std::vector<SpectrumEntry> entries;  // ordered by (d, j)

    const SpectrumEntry& at(int d, int j) const;
    std::vector<const SpectrumEntry*> level(int d) const;
};

/// Complete eigenvalue/coefficient catalogs for the b = 5, 6 chains.
/// Built once, immutable, thread-safe to read. Unsupported b throws.
const Catalog& toroidal_catalog(int b);
const Catalog& klein_catalog(int b);
const Catalog& catalog(int b, Boundary boundary);

/// Dominant eigenvalue at level d on the non-positive real axis:
/// (-1)^d sum_j (-1)^j C(d,j) (b-d)^(j) f_{d+j}(b,q).
/// Matches the catalogs' (d, 1) rows for b = 5, 6.
FBasisVector general_lambda_alternating(int b, int d);

/// All-positive-weight analog sum_j C(d,j) (b-d)^(j) f_{d+j}(b,q); bounds the
/// level-d eigenvalue magnitudes from above for q >= b.
FBasisVector general_lambda_principal(int b, int d);

/// The four level-3 eigenvalues attached to the partition [21], valid for
/// b >= 3, with their c' multiplicities.
struct Lambda21 {
    FBasisVector lambda;
    long cprime = 0;
};
std::vector<Lambda21> lambda21_family(int b);

}  // namespace kbchroma
