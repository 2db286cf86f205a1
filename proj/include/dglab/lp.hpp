#pragma once

#include <vector>

namespace dglab {

// Dense LP in the form: maximize c.x subject to A x <= b, x >= 0.
// Right-hand sides may be negative (phase one handles them).
struct LpProblem {
  int num_vars = 0;
  std::vector<std::vector<double>> rows;  // each of length num_vars
  std::vector<double> rhs;
  std::vector<double> objective;          // length num_vars
};

struct LpSolution {
  enum class Status { optimal, infeasible, unbounded, iteration_limit };
  Status status = Status::iteration_limit;
  std::vector<double> x;
  double objective_value = 0.0;
};

// Two-phase dense tableau simplex. Deterministic: Dantzig pivoting with
// lowest-index tie breaks, switching to Bland's rule after a fixed number of
// iterations so cycling cannot occur.
LpSolution solve_lp_max(const LpProblem& p);

}  // namespace dglab
