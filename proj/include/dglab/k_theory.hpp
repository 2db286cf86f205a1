#pragma once

#include "dglab/group.hpp"
#include "dglab/sandwich.hpp"

namespace dglab {

struct ImageCheck {
  bool in_image = false;
  // sum_alpha(x); zero exactly when x lies in the image of (id - gamma).
  RingElement defect;
};

// x is a coboundary (x = y - gamma(y) for some y) iff its alpha sum vanishes.
ImageCheck in_image_id_minus_gamma(const GroupElement& x);

// Solves x = y - gamma(y) by descending recursion from the top of the
// support. Requires x in the image (checked); the bottom entry telescopes to
// exactly zero, which is asserted. The result's support lies strictly above
// the bottom of x's support.
GroupElement solve_coboundary(const GroupElement& x);

// The cokernel of (id - gamma) is identified with the ring through the alpha
// sum; a class is named by that value.
struct QuotientClass {
  RingElement value;
  bool operator==(const QuotientClass& o) const { return value == o.value; }
  bool operator!=(const QuotientClass& o) const { return !(*this == o); }
};

QuotientClass class_of(const GroupElement& x);
// Canonical section: the class with a given value, represented at index 0.
GroupElement section_of(const RingElement& value);

class half_point_infeasible_error : public error {
 public:
  explicit half_point_infeasible_error(const std::string& what) : error(what) {}
};

struct PositiveRep {
  GroupElement y;
  IntPoly b;  // correction found by the one-sided sandwich (zero if unused)
  SandwichStats stats;
};

// Given x with sum_alpha(x) > 0 on F, produces y in the same class whose
// plain sum is also strictly positive on F1 (so y is in the full cone). The
// correction shifts entries -1 and +1 only, leaving the alpha sum unchanged.
// When 1/2 is in F1 the plain sum at 1/2 is invariant; if it is not already
// positive there no representative exists and half_point_infeasible_error is
// raised.
PositiveRep positive_representative(const GroupElement& x, const KmsSpec& spec,
                                    int max_degree = 0);

}  // namespace dglab
