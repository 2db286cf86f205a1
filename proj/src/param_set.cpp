#include "dglab/param_set.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace dglab {

ParamSet ParamSet::normalize(std::vector<Rat> points,
                             std::vector<std::pair<Rat, Rat>> intervals) {
  for (const auto& p : points) {
    if (!in_open_unit_interval(p)) {
      throw domain_error("set point " + rat_to_string(p) + " outside (0,1)");
    }
  }
  for (const auto& [lo, hi] : intervals) {
    if (lo > hi) {
      throw domain_error("interval [" + rat_to_string(lo) + ", " + rat_to_string(hi) +
                         "] has lo > hi");
    }
    if (!in_open_unit_interval(lo) || !in_open_unit_interval(hi)) {
      throw domain_error("interval [" + rat_to_string(lo) + ", " + rat_to_string(hi) +
                         "] not contained in (0,1)");
    }
  }
  // Degenerate intervals are points.
  std::vector<std::pair<Rat, Rat>> ivs;
  for (auto& [lo, hi] : intervals) {
    if (lo == hi) {
      points.push_back(lo);
    } else {
      ivs.emplace_back(lo, hi);
    }
  }
  std::sort(ivs.begin(), ivs.end());
  ParamSet out;
  for (auto& [lo, hi] : ivs) {
    if (!out.intervals_.empty() && lo <= out.intervals_.back().hi) {
      if (hi > out.intervals_.back().hi) out.intervals_.back().hi = hi;
    } else {
      out.intervals_.push_back({lo, hi});
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (auto& p : points) {
    bool covered = false;
    for (const auto& iv : out.intervals_) {
      if (iv.lo <= p && p <= iv.hi) {
        covered = true;
        break;
      }
    }
    if (!covered) out.points_.push_back(p);
  }
  return out;
}

bool ParamSet::member(const Rat& t0) const {
  if (std::binary_search(points_.begin(), points_.end(), t0)) return true;
  for (const auto& iv : intervals_) {
    if (iv.lo <= t0 && t0 <= iv.hi) return true;
  }
  return false;
}

bool ParamSet::operator==(const ParamSet& o) const {
  if (points_ != o.points_) return false;
  if (intervals_.size() != o.intervals_.size()) return false;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    if (intervals_[i].lo != o.intervals_[i].lo || intervals_[i].hi != o.intervals_[i].hi) {
      return false;
    }
  }
  return true;
}

Rat ParamSet::anchor_point() const {
  if (!points_.empty()) return points_.front();
  if (!intervals_.empty()) return (intervals_.front().lo + intervals_.front().hi) / 2;
  throw domain_error("anchor point of an empty set");
}

Rat ParamSet::min_value() const {
  if (empty()) throw domain_error("min of an empty set");
  bool have = false;
  Rat m;
  if (!points_.empty()) {
    m = points_.front();
    have = true;
  }
  if (!intervals_.empty() && (!have || intervals_.front().lo < m)) m = intervals_.front().lo;
  return m;
}

Rat ParamSet::max_value() const {
  if (empty()) throw domain_error("max of an empty set");
  bool have = false;
  Rat m;
  if (!points_.empty()) {
    m = points_.back();
    have = true;
  }
  if (!intervals_.empty() && (!have || intervals_.back().hi > m)) m = intervals_.back().hi;
  return m;
}

std::string ParamSet::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& p : points_) {
    if (!first) os << ", ";
    os << rat_to_string(p);
    first = false;
  }
  for (const auto& iv : intervals_) {
    if (!first) os << ", ";
    os << "[" << rat_to_string(iv.lo) << ", " << rat_to_string(iv.hi) << "]";
    first = false;
  }
  os << "}";
  return os.str();
}

KmsSpec validate_spec(const ParamSet& F, const ParamSet& F1) {
  if (F.empty()) throw spec_error(SpecViolation::empty_f, "F must be non-empty");
  Rat half(1, 2);
  bool in_f = F.member(half);
  bool in_f1 = F1.member(half);
  if (in_f != in_f1) {
    throw spec_error(SpecViolation::half_point,
                     std::string("1/2 belongs to ") + (in_f ? "F" : "F1") +
                         " but not to " + (in_f ? "F1" : "F"));
  }
  return KmsSpec{F, F1, beta_image(F1)};
}

namespace {

double log_int(const Int& x) {
  // log of a positive big integer via mantissa/exponent split.
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(d) + static_cast<double>(exp) * M_LN2;
}

}  // namespace

double t_to_beta(const Rat& t) {
  if (!in_open_unit_interval(t)) {
    throw domain_error("t = " + rat_to_string(t) + " outside (0,1)");
  }
  // (1-t)/t computed exactly first; one log at the end.
  Rat ratio = (Rat(1) - t) / t;
  return log_int(Int(ratio.get_num())) - log_int(Int(ratio.get_den()));
}

double t_to_beta(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw domain_error("t = " + std::to_string(t) + " outside (0,1)");
  }
  return std::log((1.0 - t) / t);
}

double beta_to_t(double beta) {
  if (!std::isfinite(beta)) throw domain_error("non-finite inverse temperature");
  double t;
  if (beta >= 0.0) {
    double u = std::exp(-beta);
    t = u / (1.0 + u);
  } else {
    double v = std::exp(beta);
    t = 1.0 - v / (1.0 + v);
  }
  // The true value lies strictly inside (0,1); keep the double there too.
  return std::clamp(t, std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0));
}

Rat beta_to_t_rational(double beta, int digits) {
  if (!std::isfinite(beta)) throw domain_error("non-finite inverse temperature");
  if (beta == 0.0) return Rat(1, 2);
  if (beta > 0.0) {
    double u = std::exp(-beta);
    double t = u / (1.0 + u);
    return round_to_decimal(rat_from_double(t), digits);
  }
  // Near t = 1 round the small complement and subtract exactly.
  double v = std::exp(beta);
  double omt = v / (1.0 + v);
  return Rat(1) - round_to_decimal(rat_from_double(omt), digits);
}

namespace {

std::string beta_str(double b) {
  std::ostringstream os;
  os.precision(12);
  os << b;
  return os.str();
}

}  // namespace

F1Construction f1_for_K(const BetaSetInput& K, int precision) {
  if (precision <= 0) throw domain_error("rationalization precision must be positive");
  F1Construction out;
  std::vector<Rat> points;
  std::vector<std::pair<Rat, Rat>> intervals;
  for (double b : K.points) {
    Rat t = beta_to_t_rational(b, precision);
    out.notes.push_back("beta point " + beta_str(b) + " -> t = " + rat_to_string(t));
    points.push_back(t);
  }
  for (const auto& [blo, bhi] : K.intervals) {
    if (!(blo <= bhi)) throw domain_error("inverse-temperature interval with lo > hi");
    Rat t_hi = beta_to_t_rational(blo, precision);
    Rat t_lo = beta_to_t_rational(bhi, precision);
    out.notes.push_back("beta interval [" + beta_str(blo) + ", " + beta_str(bhi) +
                        "] -> t in [" + rat_to_string(t_lo) + ", " + rat_to_string(t_hi) + "]");
    if (t_lo == t_hi) {
      points.push_back(t_lo);
    } else {
      intervals.emplace_back(t_lo, t_hi);
    }
  }
  points.emplace_back(1, 2);
  out.notes.push_back("adjoined t = 1/2 (beta = 0)");
  out.set = ParamSet::normalize(std::move(points), std::move(intervals));
  return out;
}

std::vector<BetaComponent> beta_image(const ParamSet& s) {
  std::vector<BetaComponent> out;
  for (const auto& p : s.points()) {
    BetaComponent c;
    c.is_point = true;
    c.lo = c.hi = (p == Rat(1, 2)) ? 0.0 : t_to_beta(p);
    c.t_lo = c.t_hi = p;
    c.origin = "point t = " + rat_to_string(p);
    out.push_back(std::move(c));
  }
  for (const auto& iv : s.intervals()) {
    BetaComponent c;
    c.is_point = false;
    c.lo = (iv.hi == Rat(1, 2)) ? 0.0 : t_to_beta(iv.hi);
    c.hi = (iv.lo == Rat(1, 2)) ? 0.0 : t_to_beta(iv.lo);
    c.t_lo = iv.lo;
    c.t_hi = iv.hi;
    c.origin = "interval t in [" + rat_to_string(iv.lo) + ", " + rat_to_string(iv.hi) + "]";
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const BetaComponent& a, const BetaComponent& b) { return a.lo < b.lo; });
  return out;
}

}  // namespace dglab
