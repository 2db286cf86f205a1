#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "dglab/numeric.hpp"

namespace dglab {

// Dense univariate polynomial over Z in the variable t, coefficients stored in
// ascending degree order. The zero polynomial is the empty coefficient vector;
// otherwise the top coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
  }
  static IntPoly constant(Int v) {
    IntPoly p;
    if (sgn(v) != 0) p.c_.push_back(std::move(v));
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& coeff(std::size_t i) const;
  const Int& leading() const;

  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

  IntPoly operator-() const;
  IntPoly operator+(const IntPoly& o) const;
  IntPoly operator-(const IntPoly& o) const;
  IntPoly operator*(const IntPoly& o) const;
  IntPoly operator*(const Int& k) const;

  // p(t) * t^k.
  IntPoly shifted(unsigned k) const;

  Rat eval(const Rat& x) const;
  // den^degree * p(num/den) for den > 0; same sign as p(num/den).
  Int eval_scaled(const Int& num, const Int& den) const;
  int sign_at(const Rat& x) const;

  IntPoly derivative() const;

  // gcd of coefficients, nonnegative; 0 for the zero polynomial.
  Int content() const;
  // Polynomial divided by its content; sign of the leading coefficient kept.
  IntPoly primitive_part() const;

  // Largest |coefficient|.
  Int height() const;
  // Sum of |coefficients|.
  Int l1_norm() const;

  bool divisible_by_t() const { return !c_.empty() && sgn(c_.front()) == 0; }
  IntPoly divided_by_t() const;
  bool root_at_one() const;
  IntPoly divided_by_one_minus_t() const;
  IntPoly times_one_minus_t() const;
  IntPoly times_one_minus_t_pow(unsigned k) const;

  std::string to_string() const;

 private:
  void trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  }
  std::vector<Int> c_;
};

// Primitive gcd with positive leading coefficient; gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Product of the distinct irreducible factors, primitive, with positive
// leading coefficient. square_free_part(0) = 0.
IntPoly square_free_part(const IntPoly& p);

// Sturm sequence of a squarefree polynomial (primitive parts, each scaled by a
// positive rational, which preserves every sign evaluation).
class SturmChain {
 public:
  explicit SturmChain(const IntPoly& squarefree);
  // Sign variations of the sequence at x.
  long variations_at(const Rat& x) const;
  // Number of distinct real roots in the open interval (lo, hi).
  // Requires p(lo) != 0 and p(hi) != 0.
  long roots_in_open(const Rat& lo, const Rat& hi) const;
  const std::vector<IntPoly>& sequence() const { return seq_; }

 private:
  std::vector<IntPoly> seq_;
};

}  // namespace dglab
