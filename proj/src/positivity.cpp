#include "dglab/positivity.hpp"

#include <sstream>

namespace dglab {

std::string PositivityCertificate::summary() const {
  std::ostringstream os;
  os << (verdict == Verdict::positive ? "POSITIVE" : "NOT_POSITIVE");
  if (witness_point) os << ", witness t = " << rat_to_string(*witness_point);
  if (witness_interval) {
    os << ", zero isolated in (" << rat_to_string(witness_interval->lo) << ", "
       << rat_to_string(witness_interval->hi) << ")";
  }
  os << "; " << trace.size() << " component(s) examined";
  return os.str();
}

namespace {

// Witness search once Sturm reports at least one zero of f in (lo, hi).
// Returns a rational point with f <= 0 whenever one exists along the
// refinement path; otherwise an isolating interval around a zero.
void attach_witness(PositivityCertificate& cert, const IntPoly& num, const IntPoly& sf,
                    const SturmChain& chain, Rat lo, Rat hi) {
  // Shrink to an interval holding exactly one distinct zero.
  while (true) {
    Rat mid = (lo + hi) / 2;
    if (sf.sign_at(mid) == 0) {
      cert.witness_point = mid;  // rational zero of f
      return;
    }
    long left = chain.roots_in_open(lo, mid);
    if (left >= 1) {
      hi = mid;
      if (left == 1) break;
    } else {
      lo = mid;
      if (chain.roots_in_open(lo, hi) == 1) break;
    }
  }
  // A simple zero of the squarefree part always separates its signs.
  int sf_lo = sf.sign_at(lo);
  int f_lo = num.sign_at(lo), f_hi = num.sign_at(hi);
  if (f_lo <= 0) {
    cert.witness_point = lo;
    return;
  }
  if (f_hi <= 0) {
    cert.witness_point = hi;
    return;
  }
  if (f_lo != f_hi) {
    // Crossing: bisect on the sign of f itself.
    Rat u = lo, v = hi;
    int su = f_lo;
    while (true) {
      Rat mid = (u + v) / 2;
      int sm = num.sign_at(mid);
      if (sm <= 0) {
        cert.witness_point = mid;
        return;
      }
      if (sm == su) {
        u = mid;
      } else {
        v = mid;
      }
    }
  }
  // Touching zero (even multiplicity in f): refine around the sign change of
  // the squarefree part, hoping to land on a rational zero or a nonpositive
  // value; otherwise report the isolating interval itself.
  Rat u = lo, v = hi;
  int su = sf_lo;
  for (int i = 0; i < 48; ++i) {
    Rat mid = (u + v) / 2;
    int sfm = sf.sign_at(mid);
    if (sfm == 0) {
      cert.witness_point = mid;
      return;
    }
    int fm = num.sign_at(mid);
    if (fm <= 0) {
      cert.witness_point = mid;
      return;
    }
    if (sfm == su) {
      u = mid;
    } else {
      v = mid;
    }
  }
  IntervalEvidence ev;
  ev.lo = u;
  ev.hi = v;
  ev.f_sign_lo = num.sign_at(u);
  ev.f_sign_hi = num.sign_at(v);
  ev.sf_sign_lo = sf.sign_at(u);
  ev.sf_sign_hi = sf.sign_at(v);
  cert.witness_interval = ev;
}

}  // namespace

PositivityCertificate is_positive_on(const RingElement& f, const ParamSet& S) {
  PositivityCertificate cert;
  if (S.empty()) return cert;  // vacuously positive
  if (f.is_zero()) {
    cert.verdict = Verdict::not_positive;
    cert.witness_point = S.min_value();
    return cert;
  }
  // The denominator t^a (1-t)^b is strictly positive on (0,1), so the sign
  // of f equals the sign of its numerator.
  const IntPoly& num = f.num();
  for (const auto& p : S.points()) {
    TraceEntry e;
    e.is_point = true;
    e.lo = e.hi = p;
    e.f_sign_lo = e.f_sign_hi = num.sign_at(p);
    cert.trace.push_back(e);
    if (e.f_sign_lo <= 0) {
      cert.verdict = Verdict::not_positive;
      cert.witness_point = p;
      return cert;
    }
  }
  if (S.intervals().empty()) return cert;

  IntPoly sf = square_free_part(num);
  SturmChain chain(sf);
  for (const auto& iv : S.intervals()) {
    TraceEntry e;
    e.is_point = false;
    e.lo = iv.lo;
    e.hi = iv.hi;
    e.f_sign_lo = num.sign_at(iv.lo);
    e.f_sign_hi = num.sign_at(iv.hi);
    if (e.f_sign_lo <= 0) {
      cert.trace.push_back(e);
      cert.verdict = Verdict::not_positive;
      cert.witness_point = iv.lo;
      return cert;
    }
    if (e.f_sign_hi <= 0) {
      cert.trace.push_back(e);
      cert.verdict = Verdict::not_positive;
      cert.witness_point = iv.hi;
      return cert;
    }
    e.sturm_roots = chain.roots_in_open(iv.lo, iv.hi);
    cert.trace.push_back(e);
    if (e.sturm_roots > 0) {
      cert.verdict = Verdict::not_positive;
      attach_witness(cert, num, sf, chain, iv.lo, iv.hi);
      return cert;
    }
  }
  return cert;
}

ConeCheck in_cone_GF(const RingElement& f, const ParamSet& F) {
  if (f.is_zero()) return ConeCheck{true, std::nullopt};
  PositivityCertificate cert = is_positive_on(f, F);
  bool member = cert.verdict == Verdict::positive;
  return ConeCheck{member, std::move(cert)};
}

bool strict_upper_bound_on(const Rat& c, const RingElement& f, const ParamSet& S) {
  // c > f on S  <=>  c_num - c_den * f > 0 on S (c_den > 0).
  RingElement g =
      RingElement::from_poly(IntPoly::constant(Int(c.get_num()))) - f * Int(c.get_den());
  return is_positive_on(g, S).verdict == Verdict::positive;
}

std::pair<Rat, Rat> sup_on(const RingElement& f, const ParamSet& S, const Rat& tol) {
  if (S.empty()) throw domain_error("sup over an empty set");
  if (sign(tol) <= 0) throw domain_error("sup tolerance must be positive");
  if (f.is_zero()) return {Rat(0), Rat(0)};
  if (S.intervals().empty()) {
    // Finite set: the maximum is exact.
    Rat best = f.eval(S.points().front());
    for (const auto& p : S.points()) {
      Rat v = f.eval(p);
      if (v > best) best = v;
    }
    return {best, best};
  }
  // Coarse bound: |f| <= l1(num) / (lo^a (1-hi)^b) on each interval.
  Rat bound(0);
  Int l1 = f.num().l1_norm();
  for (const auto& iv : S.intervals()) {
    Rat den(1);
    Rat lopow;
    mpz_pow_ui(lopow.get_num_mpz_t(), Rat(iv.lo).get_num_mpz_t(), f.t_pow());
    mpz_pow_ui(lopow.get_den_mpz_t(), Rat(iv.lo).get_den_mpz_t(), f.t_pow());
    lopow.canonicalize();
    Rat hipow;
    Rat omh = Rat(1) - iv.hi;
    mpz_pow_ui(hipow.get_num_mpz_t(), omh.get_num_mpz_t(), f.omt_pow());
    mpz_pow_ui(hipow.get_den_mpz_t(), omh.get_den_mpz_t(), f.omt_pow());
    hipow.canonicalize();
    den = lopow * hipow;
    Rat m = Rat(l1) / den;
    if (m > bound) bound = m;
  }
  for (const auto& p : S.points()) {
    Rat m = abs(f.eval(p));
    if (m > bound) bound = m;
  }
  Rat hi = bound + 1;
  Rat lo = -bound - 1;
  while (hi - lo > tol) {
    Rat mid = (lo + hi) / 2;
    if (strict_upper_bound_on(mid, f, S)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return {lo, hi};
}

}  // namespace dglab
