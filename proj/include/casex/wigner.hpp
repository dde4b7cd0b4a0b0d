#pragma once

#include "casex/half_int.hpp"

namespace casex {

// Wigner 3-j symbol (j1 j2 j3; m1 m2 m3), Racah sum formula.
//
// Returns exactly 0 when a selection rule fails (m1+m2+m3 != 0 or triangle
// rule violated).  Throws ArgumentError on negative j or j-m not a whole
// number, RangeError when an intermediate factorial argument exceeds the
// precomputed cap (arguments <= 60, enough for j up to ~15 used here).
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

// Wigner rotation matrix element d^j_{m1 m2}(theta), theta in radians.
// Condon-Shortley phases: d^j_{m1 m2}(pi) = (-1)^{j-m2} delta_{m1,-m2}.
double wigner_small_d(HalfInt j, HalfInt m1, HalfInt m2, double theta);

} // namespace casex
