#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kbchroma/assembler.hpp"
#include "kbchroma/oracle.hpp"
#include "test_util.hpp"

using namespace kbchroma;
using namespace kbchroma::testutil;

TEST_CASE("graph construction") {
    auto c4 = build_graph(2, 2, Boundary::torus);
    CHECK(c4.n() == 4);
    // two K_2 slices plus the collapsed matchings: the 4-cycle
    CHECK(c4.edges.size() == 4);
    CHECK_FALSE(c4.has_loops);

    auto g = build_graph(5, 3, Boundary::torus);
    CHECK(g.n() == 15);
    CHECK(g.edges.size() == 3 * 10 + 15);

    auto t = build_graph(5, 2, Boundary::torus);
    auto k = build_graph(5, 2, Boundary::klein);
    CHECK(t.edges.size() == 25);  // wrap duplicates the step matching
    CHECK(k.edges.size() == 29);  // reversed wrap shares only the fixed point

    auto loops = build_graph(5, 1, Boundary::torus);
    CHECK(loops.has_loops);

    CHECK_THROWS(build_graph(0, 2, Boundary::torus));
}

TEST_CASE("cycle cross-check: P(C_4, q) = (q-1)^4 + (q-1)") {
    auto c4 = build_graph(2, 2, Boundary::torus);
    for (long q = 0; q <= 6; ++q) {
        BigInt qm1(q - 1);
        BigInt val = qm1 * qm1 * qm1 * qm1 + qm1;
        CHECK(count_colorings_dp(c4, q) == val);
    }
    CHECK(count_colorings_dp(c4, 3) == 18);
    CHECK(count_colorings_dp(c4, 2) == 2);
}

TEST_CASE("naive enumeration agrees with the transfer count on small cases") {
    for (int b = 2; b <= 3; ++b)
        for (int m = 2; m <= 3; ++m)
            for (Boundary bd : {Boundary::torus, Boundary::klein})
                for (long q = 0; q <= 4; ++q) {
                    auto g = build_graph(b, m, bd);
                    CHECK(count_colorings_dp(g, q) == count_colorings_naive(g, q));
                }
    auto big = build_graph(5, 4, Boundary::torus);
    CHECK_THROWS(count_colorings_naive(big, 5));
}

TEST_CASE("m = 1: loops kill the count except for the even-b klein wrap") {
    for (Boundary bd : {Boundary::torus, Boundary::klein}) {
        auto g = build_graph(5, 1, bd);
        CHECK(g.has_loops);
        CHECK(count_colorings_dp(g, 7) == 0);
        CHECK(count_colorings_naive(g, 3) == 0);
    }
    CHECK(build_graph(6, 1, Boundary::torus).has_loops);

    // reversed matching on an even slice has no fixed point: plain K_6
    auto k6 = build_graph(6, 1, Boundary::klein);
    CHECK_FALSE(k6.has_loops);
    CHECK(count_colorings_dp(k6, 7) == 5040);  // 7*6*5*4*3*2
    CHECK(count_colorings_dp(k6, 7) == count_colorings_naive(k6, 7));
    CHECK(count_colorings_dp(k6, 6) == 720);
    // and the closed form tracks it exactly
    CHECK(Rational(count_colorings_dp(k6, 8)) == eval_at(klein_catalog(6), 1, Rational(8)));
}

TEST_CASE("coloring count is a degree-n polynomial: finite differences vanish") {
    for (int b = 2; b <= 3; ++b) {
        auto g = build_graph(b, 2, Boundary::torus);
        const int n = g.n();
        std::vector<BigInt> vals;
        for (long q = 0; q <= n + 1; ++q) vals.push_back(count_colorings_dp(g, q));
        for (int order = 0; order < n + 1; ++order)
            for (size_t i = 0; i + 1 < vals.size(); ++i) vals[i] = vals[i + 1] - vals[i];
        CHECK(vals[0] == 0);
    }
}

TEST_CASE("m = 4 path of the transfer count") {
    // against the naive count on a graph small enough to enumerate
    auto g = build_graph(2, 4, Boundary::torus);
    for (long q = 2; q <= 4; ++q) CHECK(count_colorings_dp(g, q) == count_colorings_naive(g, q));
    auto k = build_graph(2, 4, Boundary::klein);
    for (long q = 2; q <= 4; ++q) CHECK(count_colorings_dp(k, q) == count_colorings_naive(k, q));

    // and against the expansion at full width
    auto g5 = build_graph(5, 4, Boundary::klein);
    for (long q = 5; q <= 7; ++q)
        CHECK(Rational(count_colorings_dp(g5, q)) == eval_at(klein_catalog(5), 4, Rational(q)));
}

TEST_CASE("assembler equals transfer count across the full grid") {
    // the decisive end-to-end check: exact integer equality between the
    // catalog expansion and the independent coloring count
    for (int b : {5, 6})
        for (Boundary bd : {Boundary::torus, Boundary::klein}) {
            const Catalog& c = catalog(b, bd);
            for (int m = 2; m <= 3; ++m) {
                auto g = build_graph(b, m, bd);
                for (long q = 0; q <= b + 2; ++q) {
                    Rational expect = eval_at(c, m, Rational(q));
                    REQUIRE(is_integer(expect));
                    CHECK(count_colorings_dp(g, q) == expect.get_num());
                }
            }
        }
}

TEST_CASE("fast path: q below the chromatic number") {
    CHECK(count_colorings_dp(build_graph(5, 2, Boundary::torus), 4) == 0);
    CHECK(count_colorings_dp(build_graph(6, 3, Boundary::klein), 5) == 0);
    CHECK(count_colorings_dp(build_graph(5, 2, Boundary::torus), 0) == 0);
}
