#include "dglab/traces.hpp"

#include <algorithm>

namespace dglab {

namespace {

Rat rat_pow(const Rat& base, long e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
  out.canonicalize();
  return out;
}

}  // namespace

Rat apply(const TraceFunctional& tr, const GroupElement& x) {
  if (!in_open_unit_interval(tr.t0)) {
    throw domain_error("trace parameter outside (0,1)");
  }
  if (tr.kind == TraceKind::plain) return x.sum_plain().eval(tr.t0);
  Rat ratio = tr.t0 / (Rat(1) - tr.t0);
  Rat acc(0);
  for (const auto& [n, v] : x.entries()) acc += rat_pow(ratio, n) * v.eval(tr.t0);
  return acc;
}

std::pair<Rat, Rat> scaling_check(const TraceFunctional& tr, const GroupElement& x) {
  Rat lhs = apply(tr, x.gamma(1));
  Rat factor = tr.kind == TraceKind::plain ? tr.t0 / (Rat(1) - tr.t0) : Rat(1);
  Rat rhs = factor * apply(tr, x);
  return {lhs, rhs};
}

AtomicMeasure::AtomicMeasure(ParamSet F, std::vector<std::pair<Rat, Rat>> atoms)
    : F_(std::move(F)), atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw domain_error("measure needs at least one atom");
  std::sort(atoms_.begin(), atoms_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const auto& [t, wgt] = atoms_[i];
    if (!F_.member(t)) {
      throw domain_error("measure atom at t = " + rat_to_string(t) + " lies outside F");
    }
    if (sign(wgt) <= 0) {
      throw domain_error("measure atom at t = " + rat_to_string(t) +
                         " has non-positive weight");
    }
    if (i > 0 && atoms_[i - 1].first == t) {
      throw domain_error("duplicate measure atom at t = " + rat_to_string(t));
    }
  }
}

Rat measure_trace(const AtomicMeasure& m, const GroupElement& x) {
  Rat acc(0);
  for (const auto& [t, wgt] : m.atoms()) {
    acc += wgt * apply(TraceFunctional{TraceKind::twisted, t}, x);
  }
  return acc;
}

std::optional<TraceFunctional> classify_eigenfunctional(const Rat& s, const KmsSpec& spec) {
  if (sign(s) <= 0) throw domain_error("eigenvalue must be positive");
  if (s == 1) {
    throw domain_error("eigenvalue 1 is carried by measures on F, not by point traces");
  }
  Rat t_prime = s / (Rat(1) + s);
  if (spec.F1.member(t_prime)) {
    return TraceFunctional{TraceKind::plain, t_prime};
  }
  return std::nullopt;
}

std::vector<BetaComponent> kms_spectrum(const KmsSpec& spec) {
  std::vector<BetaComponent> comps = beta_image(spec.F1);
  if (!spec.F1.member(Rat(1, 2))) {
    BetaComponent zero;
    zero.is_point = true;
    zero.lo = zero.hi = 0.0;
    zero.t_lo = zero.t_hi = Rat(1, 2);
    zero.origin = "adjoined (always present)";
    comps.push_back(std::move(zero));
  }
  std::sort(comps.begin(), comps.end(),
            [](const BetaComponent& a, const BetaComponent& b) { return a.lo < b.lo; });
  return comps;
}

}  // namespace dglab
