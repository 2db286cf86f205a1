#pragma once

#include "dglab/group.hpp"
#include "dglab/sandwich.hpp"

namespace dglab {

struct RieszWitness {
  GroupElement z;
  // The interpolant's building blocks: z = (-b, a, b) at indices (-1, 0, 1).
  IntPoly a;
  IntPoly b;
  // Verified cone memberships, in order: z - x1, z - x2, y1 - z, y2 - z.
  GPlusResult memberships[4];
  SandwichStats stats_a;
  SandwichStats stats_b;
  bool degenerate = false;  // some x_i equals some y_j and was returned as z
};

// Riesz interpolation: given x1, x2 <= y1, y2 in the cone order, produces z
// with x_i <= z <= y_j for all pairs, supported on {-1, 0, 1}. The pairwise
// order is a checked precondition. Search degrees are capped by max_degree
// (0 = default cap).
RieszWitness interpolate(const GroupElement& x1, const GroupElement& x2,
                         const GroupElement& y1, const GroupElement& y2,
                         const KmsSpec& spec, int max_degree = 0);

}  // namespace dglab
