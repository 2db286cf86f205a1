#include "dglab/lp.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "dglab/numeric.hpp"

namespace dglab {

namespace {

constexpr double kEps = 1e-9;

// Tableau layout: columns 0..n-1 structural, n..n+m-1 slack, then artificial
// columns, final column rhs. Row m is the active objective.
struct Tableau {
  int m, n_total;
  std::vector<std::vector<double>> a;  // (m+1) x (n_total+1)
  std::vector<int> basis;              // size m

  double& at(int r, int c) { return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  double at(int r, int c) const {
    return a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  void pivot(int pr, int pc) {
    double pv = at(pr, pc);
    auto& prow = a[static_cast<std::size_t>(pr)];
    for (auto& v : prow) v /= pv;
    for (int r = 0; r <= m; ++r) {
      if (r == pr) continue;
      double f = at(r, pc);
      if (f == 0.0) continue;
      auto& row = a[static_cast<std::size_t>(r)];
      for (int c = 0; c <= n_total; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  }

  // Returns false when optimal, throws nothing; status via out params.
  enum class StepResult { moved, optimal, unbounded };

  StepResult step(bool bland, const std::vector<bool>& allowed) {
    int pc = -1;
    double best = kEps;
    for (int c = 0; c < n_total; ++c) {
      if (!allowed[static_cast<std::size_t>(c)]) continue;
      double red = at(m, c);
      if (red > (bland ? kEps : best)) {
        pc = c;
        if (bland) break;
        best = red;
      }
    }
    if (pc < 0) return StepResult::optimal;
    int pr = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int r = 0; r < m; ++r) {
      double col = at(r, pc);
      if (col > kEps) {
        double ratio = at(r, n_total) / col;
        if (ratio < best_ratio - kEps ||
            (ratio < best_ratio + kEps && pr >= 0 &&
             basis[static_cast<std::size_t>(r)] < basis[static_cast<std::size_t>(pr)])) {
          best_ratio = ratio;
          pr = r;
        }
      }
    }
    if (pr < 0) return StepResult::unbounded;
    pivot(pr, pc);
    return StepResult::moved;
  }
};

}  // namespace

LpSolution solve_lp_max(const LpProblem& p) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.rhs.size()) != m || static_cast<int>(p.objective.size()) != n) {
    throw internal_error("inconsistent LP dimensions");
  }
  // Count artificials: one per negative rhs row.
  int n_art = 0;
  for (double b : p.rhs) {
    if (b < 0.0) ++n_art;
  }
  Tableau t;
  t.m = m;
  t.n_total = n + m + n_art;
  t.a.assign(static_cast<std::size_t>(m + 1), std::vector<double>(static_cast<std::size_t>(t.n_total + 1), 0.0));
  t.basis.assign(static_cast<std::size_t>(m), 0);

  int art = n + m;
  for (int r = 0; r < m; ++r) {
    double s = p.rhs[static_cast<std::size_t>(r)] < 0.0 ? -1.0 : 1.0;
    for (int c = 0; c < n; ++c) t.at(r, c) = s * p.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    t.at(r, n + r) = s;  // slack
    t.at(r, t.n_total) = s * p.rhs[static_cast<std::size_t>(r)];
    if (s < 0.0) {
      t.at(r, art) = 1.0;
      t.basis[static_cast<std::size_t>(r)] = art;
      ++art;
    } else {
      t.basis[static_cast<std::size_t>(r)] = n + r;
    }
  }

  std::vector<bool> allowed(static_cast<std::size_t>(t.n_total), true);
  const long bland_after = 4L * (t.n_total + m);
  const long max_iters = 40L * (t.n_total + m) + 20000;

  auto run = [&](long& iter) -> Tableau::StepResult {
    while (true) {
      bool bland = iter > bland_after;
      auto res = t.step(bland, allowed);
      if (res != Tableau::StepResult::moved) return res;
      if (++iter > max_iters) return Tableau::StepResult::moved;  // caller checks iter
    }
  };

  long iter = 0;
  if (n_art > 0) {
    // Phase 1: maximize -(sum of artificials).
    for (int c = n + m; c < t.n_total; ++c) t.at(m, c) = -1.0;
    // Price out basic artificials.
    for (int r = 0; r < m; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] >= n + m) {
        for (int c = 0; c <= t.n_total; ++c) t.at(m, c) += t.at(r, c);
      }
    }
    auto res = run(iter);
    if (iter > max_iters) return LpSolution{LpSolution::Status::iteration_limit, {}, 0.0};
    if (res == Tableau::StepResult::unbounded) {
      return LpSolution{LpSolution::Status::infeasible, {}, 0.0};
    }
    // The rhs cell of the objective row carries the negated phase-1 value,
    // so a positive residue means some artificial is stuck above zero.
    if (t.at(m, t.n_total) > 1e-7) {
      return LpSolution{LpSolution::Status::infeasible, {}, 0.0};
    }
    // Pivot remaining artificials out of the basis where possible.
    for (int r = 0; r < m; ++r) {
      if (t.basis[static_cast<std::size_t>(r)] >= n + m) {
        int pc = -1;
        for (int c = 0; c < n + m; ++c) {
          if (std::fabs(t.at(r, c)) > kEps) {
            pc = c;
            break;
          }
        }
        if (pc >= 0) t.pivot(r, pc);
      }
    }
    for (int c = n + m; c < t.n_total; ++c) allowed[static_cast<std::size_t>(c)] = false;
    // Reset objective row for phase 2.
    for (int c = 0; c <= t.n_total; ++c) t.at(m, c) = 0.0;
  }

  for (int c = 0; c < n; ++c) t.at(m, c) = p.objective[static_cast<std::size_t>(c)];
  // Price out the objective over the current basis.
  for (int r = 0; r < m; ++r) {
    int bc = t.basis[static_cast<std::size_t>(r)];
    double f = t.at(m, bc);
    if (f != 0.0) {
      for (int c = 0; c <= t.n_total; ++c) t.at(m, c) -= f * t.at(r, c);
    }
  }
  auto res = run(iter);
  if (iter > max_iters) return LpSolution{LpSolution::Status::iteration_limit, {}, 0.0};
  if (res == Tableau::StepResult::unbounded) {
    return LpSolution{LpSolution::Status::unbounded, {}, 0.0};
  }

  LpSolution sol;
  sol.status = LpSolution::Status::optimal;
  sol.x.assign(static_cast<std::size_t>(n), 0.0);
  for (int r = 0; r < m; ++r) {
    int bc = t.basis[static_cast<std::size_t>(r)];
    if (bc < n) sol.x[static_cast<std::size_t>(bc)] = t.at(r, t.n_total);
  }
  double obj = 0.0;
  for (int c = 0; c < n; ++c) obj += p.objective[static_cast<std::size_t>(c)] * sol.x[static_cast<std::size_t>(c)];
  sol.objective_value = obj;
  return sol;
}

}  // namespace dglab
