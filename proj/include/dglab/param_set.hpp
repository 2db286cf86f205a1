#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dglab/numeric.hpp"

namespace dglab {

struct Interval {
  Rat lo, hi;  // lo < hi after normalization
};

// Finite union of rational points and closed rational intervals, all strictly
// inside (0,1). Normalized: intervals sorted and pairwise disjoint (touching
// ones merged), points sorted, distinct, and not covered by any interval,
// degenerate intervals demoted to points. Normal forms are unique, so two
// sets are equal iff their representations are.
class ParamSet {
 public:
  ParamSet() = default;  // empty set

  static ParamSet normalize(std::vector<Rat> points,
                            std::vector<std::pair<Rat, Rat>> intervals);

  const std::vector<Rat>& points() const { return points_; }
  const std::vector<Interval>& intervals() const { return intervals_; }
  bool empty() const { return points_.empty() && intervals_.empty(); }
  bool member(const Rat& t0) const;

  bool operator==(const ParamSet& o) const;

  // Smallest listed point if any, otherwise the midpoint of the leftmost
  // interval. Deterministic representative used for anchoring constructions.
  Rat anchor_point() const;

  // Infimum / supremum of the set (attained; the set is closed).
  Rat min_value() const;
  Rat max_value() const;

  std::string to_string() const;

 private:
  std::vector<Rat> points_;
  std::vector<Interval> intervals_;
};

enum class SpecViolation { empty_f, half_point };

// A hypothesis on the pair (F, F1) fails.
class spec_error : public error {
 public:
  spec_error(SpecViolation v, const std::string& what) : error(what), violation_(v) {}
  SpecViolation violation() const { return violation_; }

 private:
  SpecViolation violation_;
};

// One connected component of a subset of the inverse-temperature axis.
struct BetaComponent {
  bool is_point = true;
  double lo = 0.0, hi = 0.0;  // lo == hi for points
  // Exact parameter-space preimages: t_hi maps to lo and t_lo maps to hi
  // (the correspondence is order reversing).
  Rat t_lo, t_hi;
  std::string origin;
};

// Validated pair of closed sets: F non-empty, and 1/2 belongs to F iff it
// belongs to F1.
struct KmsSpec {
  ParamSet F;
  ParamSet F1;
  // Image of F1 on the inverse-temperature axis, display only.
  std::vector<BetaComponent> beta_description;
};

KmsSpec validate_spec(const ParamSet& F, const ParamSet& F1);

// Inverse-temperature correspondence: beta = log((1-t)/t), t = 1/(1+e^beta).
// Strictly decreasing; beta = 0 corresponds to t = 1/2.
double t_to_beta(const Rat& t);
double t_to_beta(double t);
double beta_to_t(double beta);
// Rational approximation of beta_to_t with denominator 10^digits, computed
// without cancellation near t = 1 (the complement is rounded, then
// subtracted exactly).
Rat beta_to_t_rational(double beta, int digits);

// Finite union of points and closed intervals on the inverse-temperature
// axis, given in floating point.
struct BetaSetInput {
  std::vector<double> points;
  std::vector<std::pair<double, double>> intervals;
};

struct F1Construction {
  ParamSet set;
  std::vector<std::string> notes;
};

// Parameter-space preimage of K with the point 1/2 adjoined (so that 0 is
// always in the resulting spectrum), endpoints rationalized to the given
// number of decimal digits.
F1Construction f1_for_K(const BetaSetInput& K, int precision = 30);

std::vector<BetaComponent> beta_image(const ParamSet& s);

}  // namespace dglab
