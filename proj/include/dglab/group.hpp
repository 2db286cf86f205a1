#pragma once

#include <map>
#include <optional>
#include <string>

#include "dglab/positivity.hpp"
#include "dglab/ring.hpp"

namespace dglab {

// Index bound for supports; beyond it a limit_error is raised.
inline constexpr long kMaxSupportIndex = 1000000;

// Finitely supported sequence of ring elements, indexed by Z. Only nonzero
// entries are stored.
class GroupElement {
 public:
  GroupElement() = default;  // zero

  // Support {0} (or empty when a = 0).
  static GroupElement single(const RingElement& a);
  static GroupElement at_index(long n, const RingElement& a);
  // Entries (-1, 0, 1) = (-b, a, b).
  static GroupElement triple(const RingElement& a, const RingElement& b);

  const std::map<long, RingElement>& entries() const { return e_; }
  // Zero when the index carries no entry.
  const RingElement& entry(long n) const;
  void set_entry(long n, RingElement v);
  bool is_zero() const { return e_.empty(); }
  long min_index() const;
  long max_index() const;

  bool operator==(const GroupElement& o) const { return e_ == o.e_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  GroupElement operator+(const GroupElement& o) const;
  GroupElement operator-(const GroupElement& o) const;
  GroupElement operator-() const;
  GroupElement operator*(const Int& k) const;

  // Shift automorphism twisted by alpha: entry n of the result is
  // alpha^k applied to entry n+k of the argument.
  GroupElement gamma(long k = 1) const;

  // Sum of alpha^n(x_n) over the support; intertwines gamma with the
  // identity (the sum is unchanged by gamma).
  RingElement sum_alpha() const;
  // Plain sum of the entries.
  RingElement sum_plain() const;

  std::string to_string() const;

 private:
  std::map<long, RingElement> e_;
};

struct GPlusResult {
  bool member = false;
  // Certificate for sum_alpha > 0 on F (absent for the zero element).
  std::optional<PositivityCertificate> cert_f;
  // Certificate for sum_plain > 0 on F1 (absent when F1 is empty or the
  // check was not reached).
  std::optional<PositivityCertificate> cert_f1;
};

// Membership in the cone: x = 0, or sum_alpha(x) > 0 on F and (when F1 is
// non-empty) sum_plain(x) > 0 on F1.
GPlusResult in_G_plus(const GroupElement& x, const KmsSpec& spec);

// The relaxed cone: only the sum_alpha clause over F.
GPlusResult in_G_plusplus(const GroupElement& x, const ParamSet& F);

class not_order_unit_error : public precondition_error {
 public:
  explicit not_order_unit_error(const std::string& what) : precondition_error(what) {}
};

// Smallest-found positive integer k with k*x - y strictly inside the cone
// (both defining sums strictly positive; the zero shortcut does not count).
// Seeded from certified sup/inf bounds of the sums, then verified, doubling
// on failure. Requires x in G+ \ {0}.
long order_unit_multiple(const GroupElement& x, const GroupElement& y, const KmsSpec& spec);

}  // namespace dglab
