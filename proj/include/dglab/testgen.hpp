#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dglab/group.hpp"
#include "dglab/param_set.hpp"

namespace dglab {

// Deterministic splitmix64 stream; identical output on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform over {0, ..., n-1}; n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Uniform over {lo, ..., hi} inclusive.
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::uint64_t state_;
};

// Stable per-suite seed: FNV-1a over the name folded into the master seed.
inline std::uint64_t suite_seed(std::uint64_t master, const std::string& name) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : name) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h ^ (master * 0x2545f4914f6cdd1dull);
}

inline IntPoly random_poly(Rng& rng, int max_degree, long height) {
  int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree + 1)));
  std::vector<Int> c(static_cast<std::size_t>(deg) + 1);
  for (auto& v : c) v = Int(rng.range(-height, height));
  return IntPoly(std::move(c));
}

inline IntPoly random_nonzero_poly(Rng& rng, int max_degree, long height) {
  for (;;) {
    IntPoly p = random_poly(rng, max_degree, height);
    if (!p.is_zero()) return p;
  }
}

inline RingElement random_ring(Rng& rng, int max_degree, long height,
                               unsigned max_pow) {
  return RingElement::canonical(
      random_poly(rng, max_degree, height),
      static_cast<unsigned>(rng.below(max_pow + 1)),
      static_cast<unsigned>(rng.below(max_pow + 1)));
}

inline GroupElement random_group(Rng& rng, int max_width, int max_degree, long height,
                                 unsigned max_pow = 2) {
  GroupElement x;
  long lo = rng.range(-3, 0);
  int width = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_width))) + 1;
  for (int i = 0; i < width; ++i) {
    x.set_entry(lo + i, random_ring(rng, max_degree, height, max_pow));
  }
  return x;
}

// Nonnegative, not identically zero numerator over t^a (1-t)^b: strictly
// positive on all of (0,1), hence in every cone.
inline RingElement random_positive_ring(Rng& rng, int max_degree, long height,
                                        unsigned max_pow = 2) {
  for (;;) {
    IntPoly p = random_poly(rng, max_degree, height);
    std::vector<Int> c(p.coeffs());
    bool any = false;
    for (auto& v : c) {
      v = abs(v);
      if (sign(v) > 0) any = true;
    }
    if (!any) continue;
    return RingElement::canonical(IntPoly(std::move(c)),
                                  static_cast<unsigned>(rng.below(max_pow + 1)),
                                  static_cast<unsigned>(rng.below(max_pow + 1)));
  }
}

inline GroupElement random_positive_group(Rng& rng, int max_width = 3,
                                          int max_degree = 3, long height = 5) {
  GroupElement x;
  long lo = rng.range(-2, 0);
  int width = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_width))) + 1;
  for (int i = 0; i < width; ++i) {
    x.set_entry(lo + i, random_positive_ring(rng, max_degree, height));
  }
  return x;
}

// Strictly inside (0,1).
inline Rat random_rational_01(Rng& rng, long max_den = 64) {
  long den = rng.range(2, max_den);
  long num = rng.range(1, den - 1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Strictly inside (0,1) and distinct from 1/2.
inline Rat random_rational_avoiding_half(Rng& rng, long max_den = 64) {
  for (;;) {
    Rat r = random_rational_01(rng, max_den);
    if (r != Rat(1, 2)) return r;
  }
}

// Non-empty union of up to max_pieces points/intervals. When avoid_half is
// set, every piece stays strictly on one side of 1/2.
inline ParamSet random_param_set(Rng& rng, int max_pieces = 3, bool avoid_half = false) {
  for (;;) {
    std::vector<Rat> pts;
    std::vector<std::pair<Rat, Rat>> ivs;
    int pieces = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_pieces))) + 1;
    for (int i = 0; i < pieces; ++i) {
      if (rng.chance(50)) {
        pts.push_back(avoid_half ? random_rational_avoiding_half(rng)
                                 : random_rational_01(rng));
      } else {
        Rat a = avoid_half ? random_rational_avoiding_half(rng) : random_rational_01(rng);
        Rat b = avoid_half ? random_rational_avoiding_half(rng) : random_rational_01(rng);
        if (avoid_half) {
          bool low_side = a < Rat(1, 2);
          while (b == a || (b < Rat(1, 2)) != low_side) {
            b = random_rational_avoiding_half(rng);
          }
        }
        if (a > b) std::swap(a, b);
        if (a == b) {
          pts.push_back(a);
        } else {
          ivs.emplace_back(a, b);
        }
      }
    }
    ParamSet s = ParamSet::normalize(std::move(pts), std::move(ivs));
    if (!s.empty() && (!avoid_half || !s.member(Rat(1, 2)))) return s;
  }
}

// A pair (F, F1) that satisfies the validation hypotheses by construction.
inline std::pair<ParamSet, ParamSet> random_conforming_pair(Rng& rng) {
  bool with_half = rng.chance(50);
  ParamSet F = random_param_set(rng, 3, !with_half);
  ParamSet F1;
  if (rng.chance(80)) F1 = random_param_set(rng, 3, !with_half);
  if (with_half) {
    std::vector<Rat> fp(F.points());
    fp.push_back(Rat(1, 2));
    std::vector<std::pair<Rat, Rat>> fi;
    for (const auto& iv : F.intervals()) fi.emplace_back(iv.lo, iv.hi);
    F = ParamSet::normalize(std::move(fp), std::move(fi));
    std::vector<Rat> gp(F1.points());
    gp.push_back(Rat(1, 2));
    std::vector<std::pair<Rat, Rat>> gi;
    for (const auto& iv : F1.intervals()) gi.emplace_back(iv.lo, iv.hi);
    F1 = ParamSet::normalize(std::move(gp), std::move(gi));
  }
  return {F, F1};
}

// A pair that breaks exactly the 1/2 hypothesis: one side contains 1/2, the
// other avoids it.
inline std::pair<ParamSet, ParamSet> random_violating_pair(Rng& rng) {
  ParamSet with_half;
  {
    ParamSet base = random_param_set(rng, 2, false);
    std::vector<Rat> pts(base.points());
    pts.push_back(Rat(1, 2));
    std::vector<std::pair<Rat, Rat>> ivs;
    for (const auto& iv : base.intervals()) ivs.emplace_back(iv.lo, iv.hi);
    with_half = ParamSet::normalize(std::move(pts), std::move(ivs));
  }
  ParamSet without = random_param_set(rng, 2, true);
  if (rng.chance(50)) return {with_half, without};
  return {without, with_half};
}

// Compact subset of the inverse-temperature axis: up to max_components
// well-separated points/intervals with endpoints in [-20, 20].
inline BetaSetInput random_beta_set(Rng& rng, int max_components = 4) {
  BetaSetInput K;
  int n = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_components))) + 1;
  std::vector<std::pair<double, double>> spans;
  for (int i = 0; i < n; ++i) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      double a = static_cast<double>(rng.range(-2000, 2000)) / 100.0;
      double b = rng.chance(40)
                     ? a
                     : a + static_cast<double>(rng.range(5, 400)) / 100.0;
      if (b > 20.0) b = a;
      bool clear = true;
      for (const auto& [lo, hi] : spans) {
        if (a <= hi + 0.05 && lo <= b + 0.05) {
          clear = false;
          break;
        }
      }
      if (!clear) continue;
      spans.emplace_back(a, b);
      if (a == b) {
        K.points.push_back(a);
      } else {
        K.intervals.emplace_back(a, b);
      }
      break;
    }
  }
  if (K.points.empty() && K.intervals.empty()) K.points.push_back(0.0);
  return K;
}

}  // namespace dglab
