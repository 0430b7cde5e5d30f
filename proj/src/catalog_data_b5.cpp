#include "catalog_build.hpp"

namespace kbchroma::detail {

// Width-5 chain of K_5 slices, periodic wrap. 27 eigenvalues in levels
// d = 0..5 with per-level counts 1,2,5,9,9,1. Eigenvalue weights are over
// f_d(5,q)..f_5(5,q); coefficients are c' times the partition polynomial,
// with the degenerate level-4 rows carrying their combined polynomials.
Catalog build_toroidal_5() {
    CatalogBuilder cb(5, Boundary::torus);

    cb.row(0, 1, {1}, {}, 1);

    cb.row(1, 1, {-1, 4}, {1}, 1);
    cb.row(1, 2, {-1, -1}, {1}, 4);

    cb.row(2, 1, {1, -6, 6}, {2}, 1);
    cb.row(2, 2, {1, -1, -4}, {2}, 4);
    cb.row(2, 3, {1, 2, 2}, {2}, 5);
    cb.row(2, 4, {1, -3}, {1, 1}, 4);
    cb.row(2, 5, {1, 2}, {1, 1}, 6);

    cb.row(3, 1, {-1, 6, -6}, {3}, 1);
    cb.row(3, 2, {-1, 1, 4}, {3}, 4);
    cb.row(3, 3, {-1, -2, -2}, {3}, 5);
    cb.row(3, 4, {-1, 4, -2}, {2, 1}, 8);
    cb.row(3, 5, {-1, 1, 1}, {2, 1}, 10);
    cb.row(3, 6, {-1, -1, 3}, {2, 1}, 12);
    cb.row(3, 7, {-1, -3, -3}, {2, 1}, 10);
    cb.row(3, 8, {-1, 2}, {1, 1, 1}, 6);
    cb.row(3, 9, {-1, -3}, {1, 1, 1}, 4);

    cb.row(4, 1, {1, -4}, {4}, 1);
    cb.row(4, 2, {1, 1}, {4}, 4);
    cb.row(4, 3, {1, -3}, {3, 1}, 12);
    cb.row(4, 4, {1, 3}, {2, 1, 1}, 12);
    cb.row(4, 5, {1, 2}, {{{3, 1}, 18}, {{2, 2}, 10}},
           fr(1, 6) * Q() * L(1) * pd({7, -63, 131}));
    cb.row(4, 6, {1}, {{{3, 1}, 15}, {{2, 1, 1}, 15}},
           fr(5, 4) * Q() * L(3) * pd({1, -7, 8}));
    cb.row(4, 7, {1, -2}, {{{2, 1, 1}, 18}, {{2, 2}, 10}},
           fr(1, 6) * Q() * L(5) * pd({7, -35, 37}));
    cb.row(4, 8, {1, -1}, {1, 1, 1, 1}, 4);
    cb.row(4, 9, {1, 4}, {1, 1, 1, 1}, 1);

    cb.top(1, {-1}, pd({1, -15, 75, -145, 89, -1}));

    return cb.finish();
}

// Same eigenvalues with one wrap matching reversed. Ten rows carry a zero
// coefficient and do not contribute; the level-5 coefficient is q-1.
Catalog build_klein_5(const Catalog& torus) {
    KleinBuilder kb(torus);

    kb.row(0, 1, {}, 1);

    kb.row(1, 1, {1}, 1);
    kb.row(1, 2, {1}, 0);

    kb.row(2, 1, {2}, 1);
    kb.row(2, 2, {2}, 0);
    kb.row(2, 3, {2}, 1);
    kb.row(2, 4, {1, 1}, 0);
    kb.row(2, 5, {1, 1}, -2);

    kb.row(3, 1, {3}, 1);
    kb.row(3, 2, {3}, 0);
    kb.row(3, 3, {3}, 1);
    kb.row(3, 4, {2, 1}, 0);
    kb.row(3, 5, {2, 1}, 2);
    kb.row(3, 6, {2, 1}, -4);
    kb.row(3, 7, {2, 1}, 2);
    kb.row(3, 8, {1, 1, 1}, -2);
    kb.row(3, 9, {1, 1, 1}, 0);

    kb.row(4, 1, {4}, 1);
    kb.row(4, 2, {4}, 0);
    kb.row(4, 3, {3, 1}, 0);
    kb.row(4, 4, {2, 1, 1}, 0);
    kb.row(4, 5, {{{3, 1}, -6}, {{2, 2}, 2}}, fr(-1, 6) * Q() * L(1) * pd({1, -9, 17}));
    kb.row(4, 6, {{{3, 1}, 3}, {{2, 1, 1}, 3}}, fr(1, 4) * Q() * L(3) * pd({1, -7, 8}));
    kb.row(4, 7, {{{2, 1, 1}, -6}, {{2, 2}, 2}}, fr(-1, 6) * Q() * L(5) * pd({1, -5, 7}));
    kb.row(4, 8, {1, 1, 1, 1}, 0);
    kb.row(4, 9, {1, 1, 1, 1}, 1);

    kb.top(1, L(1));

    return kb.finish();
}

}  // namespace kbchroma::detail
