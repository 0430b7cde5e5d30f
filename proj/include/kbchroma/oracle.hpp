#pragma once

#include <vector>

#include "kbchroma/catalog.hpp"
#include "kbchroma/rational.hpp"
#include "kbchroma/report.hpp"

namespace kbchroma {

/// Explicit chain graph: m slices of K_b, consecutive slices joined by the
/// identity matching, wrap matching identity (torus) or reversed (Klein).
/// Vertex s*b + i is position i of slice s. Duplicate edges are collapsed;
/// loops arise only for m = 1 and are flagged rather than stored.
struct StripGraph {
    int b = 0;
    int m = 0;
    Boundary boundary = Boundary::torus;
    std::vector<std::pair<int, int>> edges;  // simple, each pair sorted
    bool has_loops = false;

    int n() const { return b * m; }
};

StripGraph build_graph(int b, int m, Boundary boundary);

/// Exact proper-coloring count by transfer over slice colorings: states are
/// ordered b-tuples of distinct colors, transitions require disagreement on
/// every matching edge. Independent of the catalog machinery.
BigInt count_colorings_dp(const StripGraph& g, long q);

/// Brute-force enumeration over all q^n colorings (oracle for the oracle).
/// Guarded: throws when q^n exceeds 10^8.
BigInt count_colorings_naive(const StripGraph& g, long q);

/// The full equivalence grid: expansion value = transfer count for
/// b in {5,6}, both boundaries, m in {2,3}, q = 0..b+2; one line per cell.
Report verify_oracle_grid();

}  // namespace kbchroma
