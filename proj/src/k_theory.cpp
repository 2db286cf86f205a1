#include "dglab/k_theory.hpp"

namespace dglab {

ImageCheck in_image_id_minus_gamma(const GroupElement& x) {
  ImageCheck r;
  r.defect = x.sum_alpha();
  r.in_image = r.defect.is_zero();
  return r;
}

GroupElement solve_coboundary(const GroupElement& x) {
  if (x.is_zero()) return GroupElement();
  ImageCheck chk = in_image_id_minus_gamma(x);
  if (!chk.in_image) {
    throw precondition_error("element is not a coboundary; alpha sum is " +
                             chk.defect.to_string());
  }
  long top = x.max_index();
  long bottom = x.min_index();
  GroupElement y;
  RingElement carry;  // y_{n+1} while filling index n
  for (long n = top; n >= bottom; --n) {
    RingElement yn = x.entry(n) + carry.alpha(1);
    if (n == bottom) {
      // Telescopes to alpha^{-bottom}(sum_alpha(x set)) = 0 by the image check.
      if (!yn.is_zero()) {
        throw internal_error("coboundary recursion left a nonzero bottom entry");
      }
      break;
    }
    y.set_entry(n, yn);
    carry = yn;
  }
  return y;
}

QuotientClass class_of(const GroupElement& x) { return QuotientClass{x.sum_alpha()}; }

GroupElement section_of(const RingElement& value) { return GroupElement::single(value); }

PositiveRep positive_representative(const GroupElement& x, const KmsSpec& spec,
                                    int max_degree) {
  if (x.is_zero()) {
    throw precondition_error("the zero element has no positive representative");
  }
  GPlusResult upper = in_G_plusplus(x, spec.F);
  if (!upper.member) {
    std::string detail = upper.cert_f ? upper.cert_f->summary() : "no certificate";
    throw precondition_error("alpha sum is not positive on F (" + detail + ")");
  }

  PositiveRep rep;
  rep.stats = SandwichStats{};
  RingElement plain = x.sum_plain();
  if (spec.F1.empty() || is_positive_on(plain, spec.F1).verdict == Verdict::positive) {
    rep.y = x;
    return rep;
  }

  Rat half(1, 2);
  if (spec.F1.member(half)) {
    // Every element of the class has the same plain sum value at 1/2.
    if (sign(plain.eval(half)) <= 0) {
      throw half_point_infeasible_error(
          "plain sum at 1/2 is " + rat_to_string(plain.eval(half)) +
          "; it is invariant across the class, so no positive representative exists");
    }
  }

  // Need w * b + plain > 0 on F1 with w = (1-2t)/(t(1-t)); the upper bound is
  // artificial and relaxes on retries.
  RingElement w = RingElement::canonical(IntPoly{1, -2}, 1, 1);
  for (int m = 2; m <= 32; m *= 2) {
    SandwichProblem prob;
    prob.set = spec.F1;
    prob.max_degree = max_degree;
    RingElement bound = plain + RingElement::from_poly(IntPoly::constant(Int(1) << m));
    prob.constraints.push_back(SandwichConstraint{-plain, w, bound});
    try {
      SandwichResult res = solve_sandwich(prob);
      rep.b = res.a;
      rep.stats = res.stats;
      RingElement b_elem = RingElement::from_poly(res.a);
      GroupElement y = x;
      y.set_entry(1, y.entry(1) + b_elem.alpha(-1));
      y.set_entry(-1, y.entry(-1) - b_elem.alpha(1));
      GPlusResult full = in_G_plus(y, spec);
      if (!full.member) {
        throw internal_error("corrected representative failed cone verification");
      }
      if (y.sum_alpha() != x.sum_alpha()) {
        throw internal_error("correction changed the alpha sum");
      }
      rep.y = y;
      return rep;
    } catch (const infeasible_error&) {
      continue;  // widen the artificial bound
    } catch (const search_exhausted_error&) {
      if (m >= 32) throw;
      continue;
    }
  }
  throw search_exhausted_error("positive representative search exhausted its bound schedule",
                               SandwichStats{});
}

}  // namespace dglab
