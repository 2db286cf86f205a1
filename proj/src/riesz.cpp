#include "dglab/riesz.hpp"

namespace dglab {

namespace {

// (2t-1)/(t(1-t)): the image of the basic coboundary direction under the
// plain sum, weighting the second sandwich.
RingElement sandwich_weight() {
  return RingElement::canonical(IntPoly{-1, 2}, 1, 1);
}

}  // namespace

RieszWitness interpolate(const GroupElement& x1, const GroupElement& x2,
                         const GroupElement& y1, const GroupElement& y2,
                         const KmsSpec& spec, int max_degree) {
  const GroupElement* xs[2] = {&x1, &x2};
  const GroupElement* ys[2] = {&y1, &y2};

  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      GPlusResult r = in_G_plus(*ys[j] - *xs[i], spec);
      if (!r.member) {
        std::string which;
        if (r.cert_f && r.cert_f->verdict != Verdict::positive) {
          which = "sum over F: " + r.cert_f->summary();
        } else if (r.cert_f1) {
          which = "sum over F1: " + r.cert_f1->summary();
        }
        throw precondition_error("y" + std::to_string(j + 1) + " - x" +
                                 std::to_string(i + 1) +
                                 " is not in the positive cone (" + which + ")");
      }
    }
  }

  auto finish = [&](RieszWitness&& w) {
    const GroupElement* checks[4] = {xs[0], xs[1], ys[0], ys[1]};
    for (int k = 0; k < 4; ++k) {
      GroupElement diff = k < 2 ? w.z - *checks[k] : *checks[k] - w.z;
      w.memberships[k] = in_G_plus(diff, spec);
      if (!w.memberships[k].member) {
        throw internal_error("interpolant failed cone verification " + std::to_string(k));
      }
    }
    return std::move(w);
  };

  // Degenerate pairs short-circuit the construction.
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (*xs[i] == *ys[j]) {
        RieszWitness w;
        w.z = *xs[i];
        w.degenerate = true;
        return finish(std::move(w));
      }
    }
  }

  // Step one: an integer polynomial a strictly between the plain sums on F1
  // (or, when F1 is empty, between the alpha sums on the given anchor set).
  // Step two: b bridges the alpha sums through the weighted sandwich on F.
  auto attempt = [&](const ParamSet& step_a_set, bool plain_sums) {
    RieszWitness w;
    SandwichProblem prob_a;
    prob_a.max_degree = max_degree;
    prob_a.set = step_a_set;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        prob_a.constraints.push_back(SandwichConstraint{
            plain_sums ? xs[i]->sum_plain() : xs[i]->sum_alpha(),
            RingElement::one(),
            plain_sums ? ys[j]->sum_plain() : ys[j]->sum_alpha()});
      }
    }
    SandwichResult res_a = solve_sandwich(prob_a);
    w.a = res_a.a;
    w.stats_a = res_a.stats;
    RingElement a_elem = RingElement::from_poly(w.a);

    SandwichProblem prob_b;
    prob_b.max_degree = max_degree;
    prob_b.set = spec.F;
    RingElement weight = sandwich_weight();
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        prob_b.constraints.push_back(SandwichConstraint{
            xs[i]->sum_alpha() - a_elem, weight, ys[j]->sum_alpha() - a_elem});
      }
    }
    SandwichResult res_b = solve_sandwich(prob_b);
    w.b = res_b.a;
    w.stats_b = res_b.stats;
    w.z = GroupElement::triple(a_elem, RingElement::from_poly(w.b));
    return w;
  };

  if (!spec.F1.empty()) {
    return finish(attempt(spec.F1, true));
  }
  // Empty F1: anchor step one at a single point of F first (any a that keeps
  // step two feasible is admissible). A pointwise anchor can return a
  // polynomial that swings wildly across F; when step two then runs out of
  // budget, redo step one over all of F, which keeps a tame.
  try {
    return finish(attempt(ParamSet::normalize({spec.F.anchor_point()}, {}), false));
  } catch (const search_exhausted_error&) {
    return finish(attempt(spec.F, false));
  }
}

}  // namespace dglab
