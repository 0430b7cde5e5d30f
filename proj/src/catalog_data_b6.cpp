#include "catalog_build.hpp"

namespace kbchroma::detail {

// Width-6 chain of K_6 slices, periodic wrap. 46 eigenvalues in levels
// d = 0..6 with per-level counts 1,2,5,10,16,11,1. Level 4 row 11 and six
// level-5 rows are degenerate across two or three partitions.
Catalog build_toroidal_6() {
    CatalogBuilder cb(6, Boundary::torus);

    cb.row(0, 1, {1}, {}, 1);

    cb.row(1, 1, {-1, 5}, {1}, 1);
    cb.row(1, 2, {-1, -1}, {1}, 5);

    cb.row(2, 1, {1, -8, 12}, {2}, 1);
    cb.row(2, 2, {1, -2, -6}, {2}, 5);
    cb.row(2, 3, {1, 2, 2}, {2}, 9);
    cb.row(2, 4, {1, -4}, {1, 1}, 5);
    cb.row(2, 5, {1, 2}, {1, 1}, 10);

    cb.row(3, 1, {-1, 9, -18, 6}, {3}, 1);
    cb.row(3, 2, {-1, 3, 6, -6}, {3}, 5);
    cb.row(3, 3, {-1, -1, 2, 6}, {3}, 9);
    cb.row(3, 4, {-1, -3, -6, -6}, {3}, 5);
    cb.row(3, 5, {-1, 6, -6}, {2, 1}, 10);
    cb.row(3, 6, {-1, 2, 2}, {2, 1}, 18);
    cb.row(3, 7, {-1, 0, 6}, {2, 1}, 20);
    cb.row(3, 8, {-1, -3, -3}, {2, 1}, 32);
    cb.row(3, 9, {-1, 3}, {1, 1, 1}, 10);
    cb.row(3, 10, {-1, -3}, {1, 1, 1}, 10);

    cb.row(4, 1, {1, -8, 12}, {4}, 1);
    cb.row(4, 2, {1, -2, -6}, {4}, 5);
    cb.row(4, 3, {1, 2, 2}, {4}, 9);
    cb.row(4, 4, {1, 0, -6}, {3, 1}, 30);
    cb.row(4, 5, {1, -2, -2}, {3, 1}, 27);
    cb.row(4, 6, {1}, {3, 1}, 15);
    cb.row(4, 7, {1, 3, 3}, {3, 1}, 48);
    cb.row(4, 8, {1, -6, 6}, {3, 1}, 15);
    cb.row(4, 9, {1, 1, -3}, {2, 2}, 32);
    cb.row(4, 10, {1, 4, 6}, {2, 2}, 10);
    cb.row(4, 11, {1, -4, 2}, {{{2, 2}, 18}, {{2, 1, 1}, 30}},
           fr(1, 2) * Q() * L(5) * pd({2, -3}) * pd({2, -7}));
    cb.row(4, 12, {1, 2, -4}, {2, 1, 1}, 30);
    cb.row(4, 13, {1, -1, -1}, {2, 1, 1}, 48);
    cb.row(4, 14, {1, 4, 4}, {2, 1, 1}, 27);
    cb.row(4, 15, {1, -2}, {1, 1, 1, 1}, 10);
    cb.row(4, 16, {1, 4}, {1, 1, 1, 1}, 5);

    cb.row(5, 1, {-1, 5}, {5}, 1);
    cb.row(5, 2, {-1, -1}, {{{5}, 5}, {{2, 2, 1}, 25}},
           fr(1, 4) * Q() * L(1) * L(3) * L(4) * L(7));
    cb.row(5, 3, {-1, 4}, {4, 1}, 20);
    cb.row(5, 4, {-1}, {{{4, 1}, 36}, {{3, 1, 1}, 96}, {{2, 1, 1, 1}, 36}},
           fr(1, 5) * Q() * L(4) * pd({7, -77, 217, -162}));
    cb.row(5, 5, {-1, -2}, {{{4, 1}, 40}, {{3, 2}, 80}},
           Q() * L(1) * L(2) * pd({1, -12, 34}));
    cb.row(5, 6, {-1, 3}, {{{3, 2}, 45}, {{3, 1, 1}, 60}},
           fr(1, 8) * Q() * L(1) * L(7) * pd({7, -49, 78}));
    cb.row(5, 7, {-1, 1}, {{{3, 2}, 25}, {{1, 1, 1, 1, 1}, 5}},
           fr(1, 4) * L(1) * L(2) * L(5) * pd({1, -7, 2}));
    cb.row(5, 8, {-1, -3}, {{{3, 1, 1}, 60}, {{2, 2, 1}, 45}},
           fr(1, 8) * Q() * L(1) * L(3) * pd({7, -77, 202}));
    cb.row(5, 9, {-1, 2}, {{{2, 2, 1}, 80}, {{2, 1, 1, 1}, 40}},
           Q() * L(3) * L(6) * pd({1, -6, 6}));
    cb.row(5, 10, {-1, -4}, {2, 1, 1, 1}, 20);
    cb.row(5, 11, {-1, -5}, {1, 1, 1, 1, 1}, 1);

    cb.top(1, {1}, pd({1, -21, 160, -545, 814, -415, 1}));

    return cb.finish();
}

// Klein-bottle counterpart: rows (3,8), (4,7), (4,9), (4,13) drop out; the
// level-6 coefficient is -1. Cancellations in the degenerate rows lower the
// coefficient degree below the level ((4,11) and (5,4) most visibly).
Catalog build_klein_6(const Catalog& torus) {
    KleinBuilder kb(torus);

    kb.row(0, 1, {}, 1);

    kb.row(1, 1, {1}, 1);
    kb.row(1, 2, {1}, -1);

    kb.row(2, 1, {2}, 1);
    kb.row(2, 2, {2}, -1);
    kb.row(2, 3, {2}, 3);
    kb.row(2, 4, {1, 1}, -1);
    kb.row(2, 5, {1, 1}, -2);

    kb.row(3, 1, {3}, 1);
    kb.row(3, 2, {3}, -1);
    kb.row(3, 3, {3}, 3);
    kb.row(3, 4, {3}, -3);
    kb.row(3, 5, {2, 1}, -2);
    kb.row(3, 6, {2, 1}, 6);
    kb.row(3, 7, {2, 1}, -4);
    kb.row(3, 8, {2, 1}, 0);
    kb.row(3, 9, {1, 1, 1}, -2);
    kb.row(3, 10, {1, 1, 1}, 2);

    kb.row(4, 1, {4}, 1);
    kb.row(4, 2, {4}, -1);
    kb.row(4, 3, {4}, 3);
    kb.row(4, 4, {3, 1}, -6);
    kb.row(4, 5, {3, 1}, 9);
    kb.row(4, 6, {3, 1}, -9);
    kb.row(4, 7, {3, 1}, 0);
    kb.row(4, 8, {3, 1}, -3);
    kb.row(4, 9, {2, 2}, 0);
    kb.row(4, 10, {2, 2}, 6);
    kb.row(4, 11, {{{2, 2}, 6}, {{2, 1, 1}, -6}}, fr(-1, 2) * Q() * L(5));
    kb.row(4, 12, {2, 1, 1}, 6);
    kb.row(4, 13, {2, 1, 1}, 0);
    kb.row(4, 14, {2, 1, 1}, -9);
    kb.row(4, 15, {1, 1, 1, 1}, 2);
    kb.row(4, 16, {1, 1, 1, 1}, 1);

    kb.row(5, 1, {5}, 1);
    kb.row(5, 2, {{{5}, -1}, {{2, 2, 1}, 15}},
           fr(1, 60) * Q() * L(1) * L(3) * pd({7, -77, 216}));
    kb.row(5, 3, {4, 1}, -4);
    kb.row(5, 4, {{{4, 1}, 12}, {{2, 1, 1, 1}, -12}}, -(Q() * L(2) * L(4)));
    kb.row(5, 5, {4, 1}, -8);
    kb.row(5, 6, {{{3, 2}, 15}, {{3, 1, 1}, -12}},
           fr(1, 40) * Q() * L(1) * L(7) * pd({1, -7, 2}));
    kb.row(5, 7, {{{3, 2}, -15}, {{1, 1, 1, 1, 1}, 1}},
           fr(-1, 60) * L(1) * L(2) * L(5) * pd({7, -49, -6}));
    kb.row(5, 8, {{{3, 1, 1}, 12}, {{2, 2, 1}, -15}},
           fr(-1, 40) * Q() * L(1) * L(3) * pd({1, -11, 38}));
    kb.row(5, 9, {2, 1, 1, 1}, 8);
    kb.row(5, 10, {2, 1, 1, 1}, 4);
    kb.row(5, 11, {1, 1, 1, 1, 1}, -1);

    kb.top(1, RationalPoly(-1));

    return kb.finish();
}

}  // namespace kbchroma::detail
