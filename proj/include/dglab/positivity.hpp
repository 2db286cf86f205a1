#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dglab/param_set.hpp"
#include "dglab/ring.hpp"

namespace dglab {

enum class Verdict { positive, not_positive };

// Isolating interval around a zero of f, with exact endpoint signs of f and
// of its squarefree numerator part (the latter two differ, which proves a
// zero inside even when f only touches zero without crossing).
struct IntervalEvidence {
  Rat lo, hi;
  int f_sign_lo = 0, f_sign_hi = 0;
  int sf_sign_lo = 0, sf_sign_hi = 0;
};

// Per-component record of how the decision was reached.
struct TraceEntry {
  bool is_point = true;
  Rat lo, hi;              // equal for points
  int f_sign_lo = 0;       // exact sign of f at the point / left endpoint
  int f_sign_hi = 0;       // right endpoint (intervals only)
  long sturm_roots = -1;   // distinct zeros strictly inside (intervals only)
};

struct PositivityCertificate {
  Verdict verdict = Verdict::positive;
  std::optional<Rat> witness_point;               // f(w) <= 0 exactly, w in S
  std::optional<IntervalEvidence> witness_interval;
  std::vector<TraceEntry> trace;
  std::string summary() const;
};

// Decides whether f(t) > 0 for every t in S (vacuously true for empty S).
// Exact: endpoint/point signs by integer evaluation, interior zeros by Sturm
// counts of the squarefree numerator part. NOT_POSITIVE verdicts carry either
// a rational witness point with f(w) <= 0 or an isolating interval.
PositivityCertificate is_positive_on(const RingElement& f, const ParamSet& S);

struct ConeCheck {
  bool member = false;
  // Absent exactly when f = 0 (which belongs to the cone by definition).
  std::optional<PositivityCertificate> cert;
};

// Membership in {0} ∪ {f : f > 0 on F}.
ConeCheck in_cone_GF(const RingElement& f, const ParamSet& F);

// Certified enclosure [lo, hi] of sup_S f with hi - lo <= tol: f < hi
// everywhere on S, and lo is exceeded somewhere on S. Requires S non-empty
// and tol > 0. For a finite point set the exact maximum is returned (lo = hi).
std::pair<Rat, Rat> sup_on(const RingElement& f, const ParamSet& S, const Rat& tol);

// True iff c > f everywhere on S, decided exactly (clears denominators of c).
bool strict_upper_bound_on(const Rat& c, const RingElement& f, const ParamSet& S);

}  // namespace dglab
