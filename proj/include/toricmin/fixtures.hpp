#pragma once

#include "toricmin/toric_bundle.hpp"

namespace toricmin {

// P^2-bundles P(L0 + L1 + L2) over E x E with the fan of three rays
// v0 = (-1,-1), v1 = e1, v2 = e2, h = (-1, 0, 0) and L(e^k) = L_k - L0.
// Charts: 0 = cone(v1, v2), 1 = cone(v2, v0), 2 = cone(v0, v1). Each fixture
// names the three torus-fixed sections "P(L0)", "P(L1)", "P(L2)" (origins
// of charts 0, 1, 2) and a torus point "generic".
BundleProblem p2_bundle(const NSClass &l0, const NSClass &l1, const NSClass &l2);

// Nakayama's example. By default the classes are chosen so that the nef
// condition on box_nef is the conic a(m1 + m2) >= |(1 - m2, 1 - m1)|; with
// `literal_classes` the divisor classes are taken verbatim,
// L0 = 2F1 - 4F2 + 2D, L1 = (a-1)F1 + (a-1)F2 + (a+2)D,
// L2 = (a+3)F1 + (a-3)F2 + aD.
BundleProblem nakayama(long a, bool literal_classes = false);

// L0 = -u(F1 + F2 + D), L1 = (u+v)(F1 + F2) + (v-2u)D,
// L2 = (v-u)(F1 + F2) + (2u+v)D.
BundleProblem ex62(long u, long v);

// L0 = 4F1 + 4F2 + D, L1 = 0, L2 = -F1 + 9F2 + D.
BundleProblem ex65();

}  // namespace toricmin
