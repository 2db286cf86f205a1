#include "dglab/ring.hpp"

#include <sstream>

namespace dglab {

RingLimits& ring_limits() {
  static RingLimits limits;
  return limits;
}

RingElement RingElement::canonical(IntPoly num, unsigned t_pow, unsigned omt_pow) {
  if (num.is_zero()) return RingElement();
  while (t_pow > 0 && num.divisible_by_t()) {
    num = num.divided_by_t();
    --t_pow;
  }
  while (omt_pow > 0 && num.root_at_one()) {
    num = num.divided_by_one_minus_t();
    --omt_pow;
  }
  const RingLimits& lim = ring_limits();
  if (num.degree() > lim.max_degree) {
    throw limit_error("numerator degree " + std::to_string(num.degree()) +
                      " exceeds cap " + std::to_string(lim.max_degree));
  }
  if (t_pow > static_cast<unsigned>(lim.max_pow) ||
      omt_pow > static_cast<unsigned>(lim.max_pow)) {
    throw limit_error("denominator exponent exceeds cap " + std::to_string(lim.max_pow));
  }
  return RingElement(std::move(num), t_pow, omt_pow);
}

RingElement RingElement::operator+(const RingElement& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  unsigned a = std::max(a_, o.a_);
  unsigned b = std::max(b_, o.b_);
  IntPoly lhs = num_.shifted(a - a_).times_one_minus_t_pow(b - b_);
  IntPoly rhs = o.num_.shifted(a - o.a_).times_one_minus_t_pow(b - o.b_);
  return canonical(lhs + rhs, a, b);
}

RingElement RingElement::operator-(const RingElement& o) const { return *this + (-o); }

RingElement RingElement::operator-() const {
  RingElement r(*this);
  r.num_ = -r.num_;
  return r;
}

RingElement RingElement::operator*(const RingElement& o) const {
  if (is_zero() || o.is_zero()) return RingElement();
  return canonical(num_ * o.num_, a_ + o.a_, b_ + o.b_);
}

RingElement RingElement::operator*(const Int& k) const {
  if (sgn(k) == 0 || is_zero()) return RingElement();
  return RingElement(num_ * k, a_, b_);
}

RingElement RingElement::alpha(long k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    return canonical(num_.shifted(static_cast<unsigned>(k)), a_,
                     b_ + static_cast<unsigned>(k));
  }
  unsigned m = static_cast<unsigned>(-k);
  return canonical(num_.times_one_minus_t_pow(m), a_ + m, b_);
}

Rat RingElement::eval(const Rat& t0) const {
  if (!in_open_unit_interval(t0)) {
    throw domain_error("evaluation point " + rat_to_string(t0) + " outside (0,1)");
  }
  if (is_zero()) return Rat(0);
  Rat v = num_.eval(t0);
  if (a_ > 0) {
    Rat tp;
    mpq_class base = t0;
    mpz_pow_ui(tp.get_num_mpz_t(), base.get_num_mpz_t(), a_);
    mpz_pow_ui(tp.get_den_mpz_t(), base.get_den_mpz_t(), a_);
    v /= tp;
  }
  if (b_ > 0) {
    Rat omt = Rat(1) - t0;
    Rat op;
    mpz_pow_ui(op.get_num_mpz_t(), omt.get_num_mpz_t(), b_);
    mpz_pow_ui(op.get_den_mpz_t(), omt.get_den_mpz_t(), b_);
    v /= op;
  }
  return v;
}

std::string RingElement::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (a_ == 0 && b_ == 0) {
    os << num_.to_string();
    return os.str();
  }
  os << "(" << num_.to_string() << ")/(";
  if (a_ > 0) {
    os << "t";
    if (a_ > 1) os << "^" << a_;
    if (b_ > 0) os << " ";
  }
  if (b_ > 0) {
    os << "(1-t)";
    if (b_ > 1) os << "^" << b_;
  }
  os << ")";
  return os.str();
}

}  // namespace dglab
