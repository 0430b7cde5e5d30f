#include "kbchroma/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace kbchroma {

namespace {

void gen(int remaining, int max_part, Partition& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d) {
    if (d < 0) throw std::invalid_argument("enumerate_partitions: d must be >= 0");
    std::vector<Partition> out;
    Partition cur;
    gen(d, d, cur, out);
    return out;
}

std::vector<int> y_shift(const Partition& x) {
    const int d = std::accumulate(x.begin(), x.end(), 0);
    std::vector<int> y(d);
    for (int i = 1; i <= d; ++i) {
        int xi = i <= static_cast<int>(x.size()) ? x[i - 1] : 0;
        y[i - 1] = xi + d - i;
    }
    return y;
}

RationalPoly coeff_c(const Partition& x) {
    const auto y = y_shift(x);
    const int d = static_cast<int>(y.size());
    RationalPoly prod(1);
    const RationalPoly q = RationalPoly::variable();
    for (int yi : y) prod *= q - RationalPoly(long(yi));
    return prod / Rational(factorial(unsigned(d)));
}

}  // namespace kbchroma
