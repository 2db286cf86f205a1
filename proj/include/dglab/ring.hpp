#pragma once

#include <string>

#include "dglab/polynomial.hpp"

namespace dglab {

// Structural caps for ring elements. Exceeding them raises limit_error.
// Mutable so harness code can tighten them; not synchronized, adjust only
// from a single thread before computation starts.
struct RingLimits {
  int max_degree = 512;
  int max_pow = 64;
};
RingLimits& ring_limits();

// Element of Z[t, 1/t, 1/(1-t)] in canonical form num / (t^a (1-t)^b):
//   * if a > 0 then t does not divide num,
//   * if b > 0 then (1-t) does not divide num,
//   * zero is represented as 0 / (t^0 (1-t)^0).
// Equality of canonical forms is componentwise equality.
class RingElement {
 public:
  RingElement() = default;  // zero

  static RingElement canonical(IntPoly num, unsigned t_pow, unsigned omt_pow);
  static RingElement from_poly(IntPoly p) { return canonical(std::move(p), 0, 0); }
  static RingElement constant(long v) { return from_poly(IntPoly::constant(Int(v))); }
  static RingElement one() { return constant(1); }

  const IntPoly& num() const { return num_; }
  unsigned t_pow() const { return a_; }
  unsigned omt_pow() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return a_ == 0 && b_ == 0; }

  bool operator==(const RingElement& o) const {
    return a_ == o.a_ && b_ == o.b_ && num_ == o.num_;
  }
  bool operator!=(const RingElement& o) const { return !(*this == o); }

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement& o) const;
  RingElement operator*(const Int& k) const;

  // Multiplication by (t/(1-t))^k for any integer k.
  RingElement alpha(long k = 1) const;

  // Exact value at t0; requires 0 < t0 < 1.
  Rat eval(const Rat& t0) const;

  std::string to_string() const;

 private:
  RingElement(IntPoly num, unsigned a, unsigned b)
      : num_(std::move(num)), a_(a), b_(b) {}
  IntPoly num_;
  unsigned a_ = 0;
  unsigned b_ = 0;
};

}  // namespace dglab
