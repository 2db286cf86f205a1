#include "dglab/sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

#include "dglab/lattice.hpp"
#include "dglab/lp.hpp"

namespace dglab {

double eval_double(const RingElement& f, double t) {
  if (f.is_zero()) return 0.0;
  const auto& c = f.num().coeffs();
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i].get_d();
  if (f.t_pow() > 0) acc /= std::pow(t, static_cast<double>(f.t_pow()));
  if (f.omt_pow() > 0) acc /= std::pow(1.0 - t, static_cast<double>(f.omt_pow()));
  return acc;
}

int default_sandwich_degree_cap() {
  if (const char* env = std::getenv("DGLAB_MAX_DEGREE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0 && v <= 4096) return static_cast<int>(v);
  }
  return 32;
}

namespace {

struct Grid {
  std::vector<double> pts;
};

Grid build_grid(const ParamSet& s, int per_interval) {
  Grid g;
  for (const auto& p : s.points()) g.pts.push_back(rat_to_double(p));
  for (const auto& iv : s.intervals()) {
    double lo = rat_to_double(iv.lo);
    double hi = rat_to_double(iv.hi);
    for (int j = 0; j < per_interval; ++j) {
      double f = per_interval == 1 ? 0.5 : static_cast<double>(j) / (per_interval - 1);
      g.pts.push_back(lo + (hi - lo) * f);
    }
  }
  return g;
}

// Chebyshev-style nodes used for the lattice stage (kept small: the lattice
// reduction cost grows with the sample count).
Grid build_probe_grid(const ParamSet& s, int degree) {
  Grid g;
  for (const auto& p : s.points()) g.pts.push_back(rat_to_double(p));
  int nodes = degree + 2;
  for (const auto& iv : s.intervals()) {
    double lo = rat_to_double(iv.lo);
    double hi = rat_to_double(iv.hi);
    double c = (lo + hi) / 2, r = (hi - lo) / 2;
    for (int j = 0; j <= nodes; ++j) {
      g.pts.push_back(c + r * std::cos(M_PI * static_cast<double>(j) / nodes));
    }
  }
  return g;
}

bool verify_candidate(const IntPoly& a, const SandwichProblem& p, SandwichResult& out) {
  RingElement ae = RingElement::from_poly(a);
  std::vector<PositivityCertificate> lo_certs, up_certs;
  for (const auto& c : p.constraints) {
    RingElement wa = c.weight * ae;
    PositivityCertificate cl = is_positive_on(wa - c.lower, p.set);
    if (cl.verdict != Verdict::positive) return false;
    PositivityCertificate cu = is_positive_on(c.upper - wa, p.set);
    if (cu.verdict != Verdict::positive) return false;
    lo_certs.push_back(std::move(cl));
    up_certs.push_back(std::move(cu));
  }
  out.a = a;
  out.lower_certs = std::move(lo_certs);
  out.upper_certs = std::move(up_certs);
  return true;
}

IntPoly poly_from_ints(const std::vector<Int>& c) {
  return IntPoly(std::vector<Int>(c.begin(), c.end()));
}

}  // namespace

SandwichResult solve_sandwich(const SandwichProblem& p) {
  const int cap = p.max_degree > 0 ? p.max_degree : default_sandwich_degree_cap();
  const int iter_cap = p.max_iterations > 0 ? p.max_iterations : 3 * (cap + 1) + 8;
  SandwichResult result;
  SandwichStats& stats = result.stats;

  // Exact feasibility screen: upper - lower must be strictly positive on the
  // set; where 1/2 is in the set and a weight vanishes there, the sandwich at
  // 1/2 needs lower < 0 < upper.
  for (std::size_t i = 0; i < p.constraints.size(); ++i) {
    const auto& c = p.constraints[i];
    PositivityCertificate cert = is_positive_on(c.upper - c.lower, p.set);
    if (cert.verdict != Verdict::positive) {
      throw infeasible_error(static_cast<int>(i),
                             "constraint " + std::to_string(i) +
                                 " has no gap: " + cert.summary(),
                             cert.witness_point);
    }
  }
  Rat half(1, 2);
  if (p.set.member(half)) {
    for (std::size_t i = 0; i < p.constraints.size(); ++i) {
      const auto& c = p.constraints[i];
      if (sign(c.weight.eval(half)) == 0) {
        if (!(sign(c.lower.eval(half)) < 0 && sign(c.upper.eval(half)) > 0)) {
          throw infeasible_error(
              static_cast<int>(i),
              "weight of constraint " + std::to_string(i) +
                  " vanishes at 1/2 but the bounds do not straddle zero there",
              half);
        }
      }
    }
  }

  if (p.constraints.empty() || p.set.empty()) {
    result.a = IntPoly();
    result.stats.degree_used = 0;
    return result;
  }

  // Lattice stage: round a real target in function space to nearby integer
  // polynomials. With creal the target is the LP optimum; without it the
  // corridor midline, which reaches coefficient sizes the boxed LP cannot
  // express (narrow sets far from the weight zeros need monomial
  // coefficients far beyond any reasonable box).
  auto try_lattice = [&](int degree, const std::vector<double>* creal = nullptr) {
    const int ncoef = degree + 1;
    Grid probe = build_probe_grid(p.set, degree);
    std::vector<std::vector<double>> cols(static_cast<std::size_t>(ncoef));
    for (auto& col : cols) col.reserve(probe.pts.size() * p.constraints.size());
    std::vector<double> target;
    target.reserve(probe.pts.size() * p.constraints.size());
    for (double t : probe.pts) {
      std::vector<double> mono(static_cast<std::size_t>(ncoef));
      double acc = 1.0;
      for (int j = 0; j < ncoef; ++j) {
        mono[static_cast<std::size_t>(j)] = acc;
        acc *= t;
      }
      for (const auto& c : p.constraints) {
        double w = eval_double(c.weight, t);
        for (int j = 0; j < ncoef; ++j) {
          cols[static_cast<std::size_t>(j)].push_back(w * mono[static_cast<std::size_t>(j)]);
        }
        if (creal) {
          double acc_v = 0.0;
          for (int j = 0; j < ncoef; ++j) {
            acc_v += (*creal)[static_cast<std::size_t>(j)] * mono[static_cast<std::size_t>(j)];
          }
          target.push_back(w * acc_v);
        } else {
          target.push_back(0.5 * (eval_double(c.lower, t) + eval_double(c.upper, t)));
        }
      }
    }
    std::vector<std::vector<Int>> cands = lattice_round(cols, target);
    const Int height_cap = Int(1) << 48;
    int checked = 0;
    for (const auto& cand : cands) {
      if (checked >= 16) break;
      IntPoly poly = poly_from_ints(cand);
      if (poly.height() > height_cap) continue;
      ++checked;
      ++stats.candidates_tested;
      if (verify_candidate(poly, p, result)) {
        stats.degree_used = degree;
        return true;
      }
    }
    return false;
  };

  for (int degree = 0; degree <= cap; ++degree) {
    bool center_tried = false;
    for (int densify = 0; densify < 3; ++densify) {
      if (stats.lp_calls >= iter_cap) {
        throw search_exhausted_error("sandwich search hit its iteration budget", stats);
      }
      ++stats.grids_tried;
      const int per_interval = 64 << densify;
      Grid grid = build_grid(p.set, per_interval);
      const int ncoef = degree + 1;
      const double box = 1024.0 * static_cast<double>(1 << densify);

      // Variables: shifted coefficients u_j = c_j + box in [0, 2*box], then
      // the slack to maximize.
      LpProblem lp;
      lp.num_vars = ncoef + 1;
      lp.objective.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
      lp.objective.back() = 1.0;
      for (double t : grid.pts) {
        std::vector<double> mono(static_cast<std::size_t>(ncoef));
        double acc = 1.0;
        for (int j = 0; j < ncoef; ++j) {
          mono[static_cast<std::size_t>(j)] = acc;
          acc *= t;
        }
        double mono_sum = std::accumulate(mono.begin(), mono.end(), 0.0);
        for (const auto& c : p.constraints) {
          double w = eval_double(c.weight, t);
          double lov = eval_double(c.lower, t);
          double upv = eval_double(c.upper, t);
          std::vector<double> up_row(static_cast<std::size_t>(lp.num_vars));
          std::vector<double> lo_row(static_cast<std::size_t>(lp.num_vars));
          for (int j = 0; j < ncoef; ++j) {
            double wj = w * mono[static_cast<std::size_t>(j)];
            up_row[static_cast<std::size_t>(j)] = wj;
            lo_row[static_cast<std::size_t>(j)] = -wj;
          }
          up_row.back() = 1.0;
          lo_row.back() = 1.0;
          lp.rows.push_back(std::move(up_row));
          lp.rhs.push_back(upv + box * w * mono_sum);
          lp.rows.push_back(std::move(lo_row));
          lp.rhs.push_back(-lov - box * w * mono_sum);
        }
      }
      for (int j = 0; j < ncoef; ++j) {
        std::vector<double> row(static_cast<std::size_t>(lp.num_vars), 0.0);
        row[static_cast<std::size_t>(j)] = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(2.0 * box);
      }
      {
        std::vector<double> row(static_cast<std::size_t>(lp.num_vars), 0.0);
        row.back() = 1.0;
        lp.rows.push_back(std::move(row));
        lp.rhs.push_back(1e6);
      }

      ++stats.lp_calls;
      LpSolution sol = solve_lp_max(lp);
      if (sol.status != LpSolution::Status::optimal || sol.objective_value <= 1e-9) {
        // No slack inside this box; a larger box (next densify round) can
        // still succeed, and the midline lattice is not box-limited at all.
        if (!center_tried) {
          center_tried = true;
          if (try_lattice(degree)) return result;
        }
        continue;
      }

      std::vector<double> creal(static_cast<std::size_t>(ncoef));
      for (int j = 0; j < ncoef; ++j) creal[static_cast<std::size_t>(j)] = sol.x[static_cast<std::size_t>(j)] - box;

      // Nearest-integer rounding with a bounded +-1 neighborhood, most
      // ambiguous coefficients first.
      std::vector<Int> base(static_cast<std::size_t>(ncoef));
      std::vector<std::pair<double, int>> ambiguity;
      for (int j = 0; j < ncoef; ++j) {
        double v = creal[static_cast<std::size_t>(j)];
        double r = std::nearbyint(v);
        base[static_cast<std::size_t>(j)] = Int(static_cast<long>(r));
        ambiguity.emplace_back(std::fabs(std::fabs(v - r) - 0.5), j);
      }
      std::sort(ambiguity.begin(), ambiguity.end());

      std::vector<std::vector<Int>> candidates;
      if (densify == 0) {
        // The zero polynomial first: it settles the degenerate cases where
        // the weight vanishes on the whole set.
        candidates.emplace_back(static_cast<std::size_t>(ncoef), Int(0));
      }
      candidates.push_back(base);
      int singles = std::min<int>(8, ncoef);
      for (int s = 0; s < singles; ++s) {
        int j = ambiguity[static_cast<std::size_t>(s)].second;
        for (int d : {1, -1}) {
          auto v = base;
          v[static_cast<std::size_t>(j)] += d;
          candidates.push_back(std::move(v));
        }
      }
      int pairs = std::min<int>(3, ncoef);
      for (int a = 0; a < pairs; ++a) {
        for (int b = a + 1; b < pairs; ++b) {
          int ja = ambiguity[static_cast<std::size_t>(a)].second;
          int jb = ambiguity[static_cast<std::size_t>(b)].second;
          for (int da : {1, -1}) {
            for (int db : {1, -1}) {
              auto v = base;
              v[static_cast<std::size_t>(ja)] += da;
              v[static_cast<std::size_t>(jb)] += db;
              candidates.push_back(std::move(v));
            }
          }
        }
      }
      for (const auto& cand : candidates) {
        ++stats.candidates_tested;
        if (verify_candidate(poly_from_ints(cand), p, result)) {
          stats.degree_used = degree;
          return result;
        }
      }

      if (try_lattice(degree, &creal)) return result;
      if (!center_tried) {
        center_tried = true;
        if (try_lattice(degree)) return result;
      }
      // A denser grid changes nothing for a pure point set.
      if (p.set.intervals().empty()) break;
    }
  }
  throw search_exhausted_error("sandwich search exhausted degrees up to " +
                                   std::to_string(cap),
                               stats);
}

}  // namespace dglab
