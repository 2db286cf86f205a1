#pragma once

#include "dglab/polynomial.hpp"

namespace dglab {

// Root counting by dyadic subdivision with rational interval arithmetic.
// Independent of the Sturm machinery: the only shared code is polynomial
// arithmetic itself. Used as a cross-check oracle.
struct BisectCount {
  // Roots demonstrated by an exact zero or a sign change across a
  // subinterval on which the polynomial is strictly monotone.
  long proven_roots = 0;
  // True when the whole interval was resolved, so proven_roots equals the
  // number of distinct roots in (lo, hi). False when the depth budget ran
  // out (then proven_roots is only a lower bound).
  bool complete = false;
};

// Counts distinct real roots of p in the open interval (lo, hi).
// Requires p(lo) != 0 and p(hi) != 0. Terminates with complete = true for
// squarefree p given enough depth; may return complete = false for
// polynomials with multiple roots.
BisectCount bisect_root_count(const IntPoly& p, const Rat& lo, const Rat& hi,
                              int max_depth = 72);

}  // namespace dglab
