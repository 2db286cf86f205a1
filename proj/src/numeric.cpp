#include "dglab/numeric.hpp"

#include <cctype>
#include <cmath>

namespace dglab {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw parse_error("empty rational literal", 0);
  auto check_part = [&](const std::string& part, long base) {
    if (part.empty()) throw parse_error("empty component in rational literal", base);
    std::size_t i = 0;
    if (part[0] == '-' || part[0] == '+') i = 1;
    if (i == part.size()) throw parse_error("sign without digits in rational literal", base);
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) {
        throw parse_error("invalid character in rational literal", base + static_cast<long>(i));
      }
    }
  };
  std::size_t slash = s.find('/');
  if (slash == std::string::npos) {
    check_part(s, 0);
    return Rat(Int(s));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  check_part(num, 0);
  check_part(den, static_cast<long>(slash) + 1);
  Int d(den);
  if (sgn(d) == 0) throw parse_error("zero denominator in rational literal", static_cast<long>(slash) + 1);
  Rat r(Int(num), d);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw domain_error("non-finite double cannot become a rational");
  Rat r;
  mpq_set_d(r.get_mpq_t(), x);
  return r;
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Rat round_to_decimal(const Rat& r, int digits) {
  if (digits < 0) throw domain_error("negative rounding precision");
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round(r * scale) with ties away from zero: floor((2*num*scale + den) / (2*den)) for r >= 0.
  Int num = r.get_num() * scale;
  Int den = r.get_den();
  Int q;
  if (sgn(num) >= 0) {
    Int t = 2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Int(2 * den).get_mpz_t());
  } else {
    Int t = -2 * num + den;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), Int(2 * den).get_mpz_t());
    q = -q;
  }
  Rat out(q, scale);
  out.canonicalize();
  return out;
}

}  // namespace dglab
