#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dglab/group.hpp"

namespace dglab {

enum class TraceKind { plain, twisted };

// Point evaluation functional at t0 in (0,1). The plain form sums the raw
// entries; the twisted form weights entry n by (t0/(1-t0))^n, which makes it
// invariant under gamma (the plain form instead rescales by t0/(1-t0)).
struct TraceFunctional {
  TraceKind kind = TraceKind::plain;
  Rat t0;
};

Rat apply(const TraceFunctional& tr, const GroupElement& x);

// Exact pair (tau(gamma x), c * tau(x)) with c the expected factor:
// t0/(1-t0) for plain, 1 for twisted. The two agree identically.
std::pair<Rat, Rat> scaling_check(const TraceFunctional& tr, const GroupElement& x);

// Finitely supported measure on F: atoms (t_i, w_i) with distinct t_i in F
// and w_i > 0. Induces the functional sum_i w_i * twisted-trace at t_i.
class AtomicMeasure {
 public:
  AtomicMeasure(ParamSet F, std::vector<std::pair<Rat, Rat>> atoms);
  const ParamSet& domain() const { return F_; }
  const std::vector<std::pair<Rat, Rat>>& atoms() const { return atoms_; }

 private:
  ParamSet F_;
  std::vector<std::pair<Rat, Rat>> atoms_;
};

Rat measure_trace(const AtomicMeasure& m, const GroupElement& x);

// An eigenfunctional with eigenvalue s (s > 0, s != 1) exists iff the point
// t' = s/(1+s) lies in F1; then the plain trace at t' scales by exactly s.
// s = 1 is rejected: that eigenvalue is carried by measures, not points.
std::optional<TraceFunctional> classify_eigenfunctional(const Rat& s, const KmsSpec& spec);

// The inverse-temperature spectrum: the image of F1 under beta = log((1-t)/t)
// together with beta = 0, sorted; 0 is merged into a component that already
// covers it (exactly when 1/2 is in F1).
std::vector<BetaComponent> kms_spectrum(const KmsSpec& spec);

}  // namespace dglab
