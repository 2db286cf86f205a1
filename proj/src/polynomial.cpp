#include "dglab/polynomial.hpp"

#include <sstream>

namespace dglab {

namespace {
const Int kZero(0);
}

const Int& IntPoly::coeff(std::size_t i) const {
  if (i < c_.size()) return c_[i];
  return kZero;
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
  std::vector<Int> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return IntPoly();
  std::vector<Int> out(c_.size() + o.c_.size() - 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::operator*(const Int& k) const {
  if (sgn(k) == 0) return IntPoly();
  IntPoly r(*this);
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::shifted(unsigned k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Int> out(c_.size() + k, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
  return IntPoly(std::move(out));
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= x;
    acc += Rat(c_[i]);
  }
  return acc;
}

Int IntPoly::eval_scaled(const Int& num, const Int& den) const {
  // Horner over the homogenized form: sum c_i num^i den^(d-i).
  if (c_.empty()) return Int(0);
  Int acc = c_.back();
  Int den_pow(1);
  for (std::size_t i = c_.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    acc += c_[i] * den_pow;
  }
  return acc;
}

int IntPoly::sign_at(const Rat& x) const {
  return sgn(eval_scaled(Int(x.get_num()), Int(x.get_den())));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly();
  std::vector<Int> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Int(static_cast<long>(i));
  return IntPoly(std::move(out));
}

Int IntPoly::content() const {
  Int g(0);
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  Int g = content();
  if (sgn(g) == 0 || g == 1) return *this;
  IntPoly r(*this);
  for (auto& v : r.c_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return r;
}

Int IntPoly::height() const {
  Int h(0);
  for (const auto& v : c_) {
    Int a = abs(v);
    if (a > h) h = a;
  }
  return h;
}

Int IntPoly::l1_norm() const {
  Int s(0);
  for (const auto& v : c_) s += abs(v);
  return s;
}

IntPoly IntPoly::divided_by_t() const {
  if (!divisible_by_t()) throw internal_error("polynomial not divisible by t");
  return IntPoly(std::vector<Int>(c_.begin() + 1, c_.end()));
}

bool IntPoly::root_at_one() const {
  Int s(0);
  for (const auto& v : c_) s += v;
  return sgn(s) == 0;
}

IntPoly IntPoly::divided_by_one_minus_t() const {
  // f = (1-t) g with g_0 = f_0, g_i = f_i + g_{i-1}; consistent iff f(1) = 0.
  if (is_zero()) return IntPoly();
  if (!root_at_one()) throw internal_error("polynomial not divisible by 1-t");
  std::vector<Int> g(c_.size() - 1);
  Int carry(0);
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    carry += c_[i];
    g[i] = carry;
  }
  return IntPoly(std::move(g));
}

IntPoly IntPoly::times_one_minus_t() const {
  if (is_zero()) return IntPoly();
  std::vector<Int> out(c_.size() + 1, Int(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    out[i] += c_[i];
    out[i + 1] -= c_[i];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::times_one_minus_t_pow(unsigned k) const {
  IntPoly r(*this);
  for (unsigned i = 0; i < k; ++i) r = r.times_one_minus_t();
  return r;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    Int a = abs(c_[i]);
    if (first) {
      if (sgn(c_[i]) < 0) os << "-";
      first = false;
    } else {
      os << (sgn(c_[i]) < 0 ? " - " : " + ");
    }
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i == 1) os << "t";
    if (i > 1) os << "t^" << i;
  }
  return os.str();
}

namespace {

// Pseudo-remainder scaled so the result equals a positive multiple of the
// true rational remainder rem(a, b).
IntPoly signed_prem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw internal_error("pseudo-remainder by zero");
  IntPoly r = a;
  const Int& lb = b.leading();
  int d = b.degree();
  long steps = 0;
  while (!r.is_zero() && r.degree() >= d) {
    int e = r.degree() - d;
    IntPoly lead_term = (b * r.leading()).shifted(static_cast<unsigned>(e));
    r = r * lb - lead_term;
    ++steps;
  }
  // r = lb^steps * rem(a, b); fix the sign when lb < 0 and steps is odd.
  if (sgn(lb) < 0 && (steps % 2) != 0) return -r;
  return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly g0 = a.primitive_part();
  IntPoly g1 = b.primitive_part();
  if (g0.degree() < g1.degree()) std::swap(g0, g1);
  while (!g1.is_zero()) {
    IntPoly r = signed_prem(g0, g1).primitive_part();
    g0 = std::move(g1);
    g1 = std::move(r);
  }
  if (!g0.is_zero() && sgn(g0.leading()) < 0) g0 = -g0;
  return g0;
}

namespace {

// Exact quotient of primitive polynomials when divisor | dividend over Q.
IntPoly divide_exact(const IntPoly& dividend, const IntPoly& divisor) {
  if (divisor.is_zero()) throw internal_error("division by zero polynomial");
  if (dividend.is_zero()) return IntPoly();
  IntPoly r = dividend;
  std::vector<Int> q(static_cast<std::size_t>(dividend.degree() - divisor.degree()) + 1, Int(0));
  while (!r.is_zero() && r.degree() >= divisor.degree()) {
    int e = r.degree() - divisor.degree();
    if (!mpz_divisible_p(r.leading().get_mpz_t(), divisor.leading().get_mpz_t())) {
      throw internal_error("exact polynomial division has nonzero remainder");
    }
    Int qc;
    mpz_divexact(qc.get_mpz_t(), r.leading().get_mpz_t(), divisor.leading().get_mpz_t());
    q[static_cast<std::size_t>(e)] = qc;
    r = r - (divisor * qc).shifted(static_cast<unsigned>(e));
  }
  if (!r.is_zero()) throw internal_error("exact polynomial division has nonzero remainder");
  return IntPoly(std::move(q));
}

}  // namespace

IntPoly square_free_part(const IntPoly& p) {
  if (p.is_zero()) return IntPoly();
  IntPoly pp = p.primitive_part();
  if (sgn(pp.leading()) < 0) pp = -pp;
  if (pp.degree() <= 1) return pp;
  IntPoly g = poly_gcd(pp, pp.derivative());
  if (g.degree() == 0) return pp;
  return divide_exact(pp, g).primitive_part();
}

SturmChain::SturmChain(const IntPoly& squarefree) {
  if (squarefree.is_zero()) throw internal_error("Sturm chain of the zero polynomial");
  seq_.push_back(squarefree.primitive_part());
  IntPoly d = squarefree.derivative();
  if (d.is_zero()) return;
  seq_.push_back(d.primitive_part());
  while (true) {
    const IntPoly& s0 = seq_[seq_.size() - 2];
    const IntPoly& s1 = seq_.back();
    IntPoly r = signed_prem(s0, s1);
    if (r.is_zero()) break;
    seq_.push_back((-r).primitive_part());
    if (seq_.back().degree() == 0) break;
  }
}

long SturmChain::variations_at(const Rat& x) const {
  long count = 0;
  int prev = 0;
  Int num(x.get_num());
  Int den(x.get_den());
  for (const auto& p : seq_) {
    int s = sgn(p.eval_scaled(num, den));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

long SturmChain::roots_in_open(const Rat& lo, const Rat& hi) const {
  if (lo >= hi) throw internal_error("Sturm query on empty interval");
  if (seq_[0].sign_at(lo) == 0 || seq_[0].sign_at(hi) == 0) {
    throw internal_error("Sturm query with a root at an endpoint");
  }
  return variations_at(lo) - variations_at(hi);
}

}  // namespace dglab
