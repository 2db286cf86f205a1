#pragma once

#include <optional>
#include <vector>

#include "dglab/positivity.hpp"

namespace dglab {

// One two-sided constraint: lower(t) < weight(t) * a(t) < upper(t) on the
// query set, strict at every point.
struct SandwichConstraint {
  RingElement lower;
  RingElement weight;  // often 1 or (2t-1)/(t(1-t))
  RingElement upper;
};

struct SandwichProblem {
  std::vector<SandwichConstraint> constraints;
  ParamSet set;
  int max_degree = 0;      // 0 = default cap (DGLAB_MAX_DEGREE env or 32)
  int max_iterations = 0;  // 0 = default LP attempt budget
};

struct SandwichStats {
  int degree_used = -1;
  int grids_tried = 0;
  int lp_calls = 0;
  int candidates_tested = 0;
};

struct SandwichResult {
  IntPoly a;
  // Exact certificates per constraint, in order: weight*a - lower > 0 and
  // upper - weight*a > 0 on the set.
  std::vector<PositivityCertificate> lower_certs;
  std::vector<PositivityCertificate> upper_certs;
  SandwichStats stats;
};

// No integer polynomial can satisfy the constraints (detected exactly).
class infeasible_error : public error {
 public:
  infeasible_error(int constraint_index, const std::string& what,
                   std::optional<Rat> witness)
      : error(what), constraint_index_(constraint_index), witness_(std::move(witness)) {}
  int constraint_index() const { return constraint_index_; }
  const std::optional<Rat>& witness() const { return witness_; }

 private:
  int constraint_index_;
  std::optional<Rat> witness_;
};

// The search ran out of degree / iteration budget without a verified hit.
class search_exhausted_error : public error {
 public:
  search_exhausted_error(const std::string& what, SandwichStats stats)
      : error(what), stats_(stats) {}
  const SandwichStats& stats() const { return stats_; }

 private:
  SandwichStats stats_;
};

// Degree cap used when a problem does not set one: the DGLAB_MAX_DEGREE
// environment variable when set, otherwise 32.
int default_sandwich_degree_cap();

// Finds an integer polynomial a with lower < weight * a < upper on the set,
// for every constraint simultaneously. Search: sample grid -> LP maximizing
// the minimal slack -> integer rounding (nearest with bounded +-1
// exploration, then lattice rounding of the LP optimum in function space) ->
// exact verification of every candidate. On failure the grid is doubled;
// after two doublings the degree grows. Deterministic throughout; floating
// point only ever proposes candidates, acceptance is exact.
SandwichResult solve_sandwich(const SandwichProblem& p);

double eval_double(const RingElement& f, double t);

}  // namespace dglab
