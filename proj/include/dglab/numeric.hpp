#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dglab {

using Int = mpz_class;
using Rat = mpq_class;

// Error hierarchy. The CLI maps these onto exit codes; library users can catch
// the base type.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// A value lies outside the mathematical domain of an operation (evaluation
// point outside (0,1), empty set where a non-empty one is required, ...).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// A configured structural cap (degree, exponent, support index) was exceeded.
class limit_error : public error {
 public:
  explicit limit_error(const std::string& what) : error(what) {}
};

// Malformed textual input. `offset` is a byte offset into the input when
// known, -1 otherwise.
class parse_error : public error {
 public:
  parse_error(const std::string& what, long offset = -1)
      : error(offset >= 0 ? what + " (byte " + std::to_string(offset) + ")" : what),
        offset_(offset) {}
  long offset() const { return offset_; }

 private:
  long offset_;
};

// An operation's documented precondition does not hold for the given inputs.
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

// Internal consistency check failed; indicates a bug, never bad input.
class internal_error : public error {
 public:
  explicit internal_error(const std::string& what) : error(what) {}
};

inline int sign(const Int& x) { return sgn(x); }
inline int sign(const Rat& x) { return sgn(x); }

inline Rat make_rat(long num, long den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "n" or "n/d" with optional leading minus signs on either part.
// Canonicalizes; rejects zero denominators and garbage.
Rat rat_from_string(const std::string& s);

// "n" if integral, "n/d" otherwise (canonical form).
std::string rat_to_string(const Rat& r);

// Exact conversion; every finite double is a dyadic rational.
Rat rat_from_double(double x);

double rat_to_double(const Rat& r);

// Nearest rational with denominator 10^digits (ties away from zero).
Rat round_to_decimal(const Rat& r, int digits);

inline bool in_open_unit_interval(const Rat& r) {
  return sign(r) > 0 && r < 1;
}

}  // namespace dglab
