#include "dglab/group.hpp"

#include <sstream>

namespace dglab {

namespace {
const RingElement kZeroRing;

void check_index(long n) {
  if (n > kMaxSupportIndex || n < -kMaxSupportIndex) {
    throw limit_error("support index " + std::to_string(n) + " exceeds bound");
  }
}
}  // namespace

GroupElement GroupElement::single(const RingElement& a) { return at_index(0, a); }

GroupElement GroupElement::at_index(long n, const RingElement& a) {
  GroupElement x;
  x.set_entry(n, a);
  return x;
}

GroupElement GroupElement::triple(const RingElement& a, const RingElement& b) {
  GroupElement x;
  x.set_entry(-1, -b);
  x.set_entry(0, a);
  x.set_entry(1, b);
  return x;
}

const RingElement& GroupElement::entry(long n) const {
  auto it = e_.find(n);
  if (it == e_.end()) return kZeroRing;
  return it->second;
}

void GroupElement::set_entry(long n, RingElement v) {
  check_index(n);
  if (v.is_zero()) {
    e_.erase(n);
  } else {
    e_[n] = std::move(v);
  }
}

long GroupElement::min_index() const {
  if (e_.empty()) throw domain_error("support of the zero element");
  return e_.begin()->first;
}

long GroupElement::max_index() const {
  if (e_.empty()) throw domain_error("support of the zero element");
  return e_.rbegin()->first;
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  GroupElement r(*this);
  for (const auto& [n, v] : o.e_) r.set_entry(n, r.entry(n) + v);
  return r;
}

GroupElement GroupElement::operator-(const GroupElement& o) const { return *this + (-o); }

GroupElement GroupElement::operator-() const {
  GroupElement r;
  for (const auto& [n, v] : e_) r.e_.emplace(n, -v);
  return r;
}

GroupElement GroupElement::operator*(const Int& k) const {
  GroupElement r;
  if (sgn(k) == 0) return r;
  for (const auto& [n, v] : e_) r.e_.emplace(n, v * k);
  return r;
}

GroupElement GroupElement::gamma(long k) const {
  GroupElement r;
  for (const auto& [n, v] : e_) {
    check_index(n - k);
    r.e_.emplace(n - k, v.alpha(k));
  }
  return r;
}

RingElement GroupElement::sum_alpha() const {
  RingElement s;
  for (const auto& [n, v] : e_) s = s + v.alpha(n);
  return s;
}

RingElement GroupElement::sum_plain() const {
  RingElement s;
  for (const auto& [n, v] : e_) s = s + v;
  return s;
}

std::string GroupElement::to_string() const {
  if (e_.empty()) return "0";
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [n, v] : e_) {
    if (!first) os << ", ";
    os << n << " -> " << v.to_string();
    first = false;
  }
  os << "}";
  return os.str();
}

GPlusResult in_G_plus(const GroupElement& x, const KmsSpec& spec) {
  if (x.is_zero()) return GPlusResult{true, std::nullopt, std::nullopt};
  GPlusResult r;
  r.cert_f = is_positive_on(x.sum_alpha(), spec.F);
  if (r.cert_f->verdict != Verdict::positive) {
    r.member = false;
    return r;
  }
  if (spec.F1.empty()) {
    r.member = true;
    return r;
  }
  r.cert_f1 = is_positive_on(x.sum_plain(), spec.F1);
  r.member = r.cert_f1->verdict == Verdict::positive;
  return r;
}

GPlusResult in_G_plusplus(const GroupElement& x, const ParamSet& F) {
  if (x.is_zero()) return GPlusResult{true, std::nullopt, std::nullopt};
  GPlusResult r;
  r.cert_f = is_positive_on(x.sum_alpha(), F);
  r.member = r.cert_f->verdict == Verdict::positive;
  return r;
}

namespace {

// Strict cone test used for order-unit verification: both sums positive,
// zero not allowed.
bool strictly_positive(const GroupElement& d, const KmsSpec& spec) {
  if (is_positive_on(d.sum_alpha(), spec.F).verdict != Verdict::positive) return false;
  if (spec.F1.empty()) return true;
  return is_positive_on(d.sum_plain(), spec.F1).verdict == Verdict::positive;
}

// Integer upper bound for sup(num/den) from certified enclosures: an upper
// bound of the numerator sup divided by a positive lower bound of the
// denominator inf, denominators shrunk until the inf bound is positive.
long seed_ratio(const RingElement& num_elem, const RingElement& den_elem,
                const ParamSet& S) {
  Rat tol(1, 8);
  for (int i = 0; i < 64; ++i) {
    auto [den_lo, den_hi] = sup_on(-den_elem, S, tol);
    Rat inf_lower = -den_hi;  // inf(den) >= -sup(-den) upper bound
    if (sign(inf_lower) > 0) {
      auto [num_lo, num_hi] = sup_on(num_elem, S, tol);
      if (sign(num_hi) <= 0) return 1;
      Rat ratio = num_hi / inf_lower;
      Int k;
      mpz_fdiv_q(k.get_mpz_t(), ratio.get_num().get_mpz_t(), ratio.get_den().get_mpz_t());
      if (!k.fits_slong_p()) throw limit_error("order-unit seed out of range");
      long v = k.get_si() + 1;
      return v < 1 ? 1 : v;
    }
    tol /= 2;
  }
  throw internal_error("could not certify a positive lower bound for the order unit");
}

}  // namespace

long order_unit_multiple(const GroupElement& x, const GroupElement& y, const KmsSpec& spec) {
  if (x.is_zero() || !in_G_plus(x, spec).member) {
    throw not_order_unit_error("x is not a nonzero element of the positive cone");
  }
  long k = 1;
  if (!y.is_zero()) {
    long seed_f = seed_ratio(y.sum_alpha(), x.sum_alpha(), spec.F);
    long seed_f1 = spec.F1.empty() ? 1 : seed_ratio(y.sum_plain(), x.sum_plain(), spec.F1);
    k = std::max(seed_f, seed_f1);
  }
  for (int i = 0; i < 62; ++i) {
    GroupElement d = x * Int(k) - y;
    if (strictly_positive(d, spec)) return k;
    if (k > (1L << 61)) break;
    k *= 2;
  }
  throw internal_error("order-unit multiple verification did not converge");
}

}  // namespace dglab
