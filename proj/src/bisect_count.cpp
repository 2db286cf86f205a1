#include "dglab/bisect_count.hpp"

#include <algorithm>

namespace dglab {

namespace {

struct RatInterval {
  Rat lo, hi;
};

RatInterval iv_mul(const RatInterval& a, const RatInterval& b) {
  Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {std::min(std::min(p1, p2), std::min(p3, p4)),
          std::max(std::max(p1, p2), std::max(p3, p4))};
}

// Interval Horner enclosure of p([l, r]).
RatInterval range_on(const IntPoly& p, const Rat& l, const Rat& r) {
  if (p.is_zero()) return {Rat(0), Rat(0)};
  const auto& c = p.coeffs();
  RatInterval x{l, r};
  RatInterval acc{Rat(c.back()), Rat(c.back())};
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = iv_mul(acc, x);
    acc.lo += Rat(c[i]);
    acc.hi += Rat(c[i]);
  }
  return acc;
}

bool excludes_zero(const RatInterval& iv) {
  return sgn(iv.lo) > 0 || sgn(iv.hi) < 0;
}

struct Ctx {
  const IntPoly& p;
  const IntPoly dp;
};

BisectCount count_rec(const Ctx& ctx, const Rat& l, const Rat& r, int sl, int sr,
                      int depth) {
  if (excludes_zero(range_on(ctx.p, l, r))) return {0, true};
  if (excludes_zero(range_on(ctx.dp, l, r))) {
    // Strictly monotone: at most one root, present iff the signs differ.
    return {sl != sr ? 1L : 0L, true};
  }
  if (depth <= 0) return {0, false};

  Rat m = (l + r) / 2;
  int sm = ctx.p.sign_at(m);
  if (sm != 0) {
    BisectCount a = count_rec(ctx, l, m, sl, sm, depth - 1);
    BisectCount b = count_rec(ctx, m, r, sm, sr, depth - 1);
    return {a.proven_roots + b.proven_roots, a.complete && b.complete};
  }

  // Exact rational root at the midpoint. Shrink a bracket around it on which
  // the derivative has constant sign, so m is the only root inside.
  Rat eps = (r - l) / 4;
  for (int tries = 0; tries < 80; ++tries) {
    if (excludes_zero(range_on(ctx.dp, m - eps, m + eps))) {
      int s_left = ctx.p.sign_at(m - eps);
      int s_right = ctx.p.sign_at(m + eps);
      if (s_left == 0 || s_right == 0) break;  // cannot happen when monotone
      BisectCount a = count_rec(ctx, l, m - eps, sl, s_left, depth - 1);
      BisectCount b = count_rec(ctx, m + eps, r, s_right, sr, depth - 1);
      return {a.proven_roots + 1 + b.proven_roots, a.complete && b.complete};
    }
    eps /= 2;
  }
  return {1, false};
}

}  // namespace

BisectCount bisect_root_count(const IntPoly& p, const Rat& lo, const Rat& hi,
                              int max_depth) {
  if (lo >= hi) throw domain_error("bisection count on empty interval");
  if (p.is_zero()) throw domain_error("bisection count of the zero polynomial");
  int sl = p.sign_at(lo);
  int sr = p.sign_at(hi);
  if (sl == 0 || sr == 0) throw domain_error("bisection count with a root at an endpoint");
  Ctx ctx{p, p.derivative()};
  return count_rec(ctx, lo, hi, sl, sr, max_depth);
}

}  // namespace dglab
