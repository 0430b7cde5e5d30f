#pragma once

#include <vector>

#include "kbchroma/poly.hpp"

namespace kbchroma {

/// Partition of an integer: positive parts in nonincreasing order.
using Partition = std::vector<int>;

/// All partitions of d in reverse-lexicographic order ([3],[2,1],[1,1,1]).
/// d = 0 yields the single empty partition.
std::vector<Partition> enumerate_partitions(int d);

/// The shifted partition y_i = x_i + d - i (1-indexed, x padded with zeros);
/// strictly decreasing, summing to d(d+1)/2.
std::vector<int> y_shift(const Partition& x);

/// Coefficient polynomial attached to a partition X of d:
/// (1/d!) prod_i (q - y_i). Degree d; the empty partition gives 1.
RationalPoly coeff_c(const Partition& x);

}  // namespace kbchroma
