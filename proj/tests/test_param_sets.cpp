#include "doctest.h"

#include <cmath>

#include "dglab/param_set.hpp"

using namespace dglab;

namespace {
ParamSet pts(std::initializer_list<Rat> l) {
  return ParamSet::normalize(std::vector<Rat>(l), {});
}
}  // namespace

TEST_SUITE("param_sets") {

TEST_CASE("normalization merges and dedupes") {
  ParamSet s = ParamSet::normalize({Rat(1, 2), Rat(1, 2), Rat(9, 10)},
                                   {{Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(3, 4)}});
  // The two intervals touch at 1/2 and merge; 1/2 is absorbed by the merge.
  REQUIRE(s.intervals().size() == 1);
  CHECK(s.intervals()[0].lo == Rat(1, 4));
  CHECK(s.intervals()[0].hi == Rat(3, 4));
  REQUIRE(s.points().size() == 1);
  CHECK(s.points()[0] == Rat(9, 10));
  // Degenerate interval demotes to a point.
  ParamSet d = ParamSet::normalize({}, {{Rat(1, 3), Rat(1, 3)}});
  CHECK(d.intervals().empty());
  REQUIRE(d.points().size() == 1);
  CHECK(d.points()[0] == Rat(1, 3));
  CHECK(ParamSet().empty());
  CHECK_THROWS_AS(ParamSet::normalize({}, {{Rat(1, 2), Rat(1, 3)}}), domain_error);
  CHECK_THROWS_AS(ParamSet::normalize({Rat(0)}, {}), domain_error);
  CHECK_THROWS_AS(ParamSet::normalize({}, {{Rat(1, 2), Rat(1)}}), domain_error);
  CHECK_THROWS_AS(ParamSet::normalize({Rat(-1, 2)}, {}), domain_error);
}

TEST_CASE("membership and extremes") {
  ParamSet s = ParamSet::normalize({Rat(9, 10)}, {{Rat(1, 4), Rat(1, 2)}});
  CHECK(s.member(Rat(1, 4)));
  CHECK(s.member(Rat(1, 3)));
  CHECK(s.member(Rat(1, 2)));
  CHECK(s.member(Rat(9, 10)));
  CHECK_FALSE(s.member(Rat(3, 5)));
  CHECK_FALSE(s.member(Rat(1, 5)));
  CHECK(s.min_value() == Rat(1, 4));
  CHECK(s.max_value() == Rat(9, 10));
  ParamSet p = pts({Rat(1, 2), Rat(1, 3)});
  CHECK(p.min_value() == Rat(1, 3));
  CHECK(p.max_value() == Rat(1, 2));
  CHECK(p.anchor_point() == Rat(1, 3));
  CHECK(s.anchor_point() == Rat(9, 10));  // smallest listed point wins
  ParamSet iv = ParamSet::normalize({}, {{Rat(1, 4), Rat(3, 4)}});
  CHECK(iv.anchor_point() == Rat(1, 2));
}

TEST_CASE("equality through unique normal forms") {
  ParamSet a = ParamSet::normalize({Rat(1, 3)}, {{Rat(2, 5), Rat(3, 5)}});
  ParamSet b = ParamSet::normalize({Rat(1, 2), Rat(1, 3)}, {{Rat(2, 5), Rat(3, 5)}});
  CHECK(a == b);  // 1/2 lies inside the interval
  CHECK_FALSE(a == pts({Rat(1, 3)}));
}

TEST_CASE("spec validation gates the half point") {
  ParamSet half = pts({Rat(1, 2)});
  ParamSet both = pts({Rat(1, 2), Rat(1, 3)});
  CHECK_NOTHROW(validate_spec(half, both));
  CHECK_NOTHROW(validate_spec(half, half));
  CHECK_NOTHROW(validate_spec(pts({Rat(1, 3)}), ParamSet()));
  CHECK_NOTHROW(validate_spec(pts({Rat(1, 3)}), pts({Rat(1, 4)})));
  try {
    validate_spec(pts({Rat(1, 3)}), half);
    FAIL("expected spec_error");
  } catch (const spec_error& e) {
    CHECK(e.violation() == SpecViolation::half_point);
  }
  try {
    validate_spec(half, pts({Rat(1, 3)}));
    FAIL("expected spec_error");
  } catch (const spec_error& e) {
    CHECK(e.violation() == SpecViolation::half_point);
  }
  try {
    validate_spec(ParamSet(), ParamSet());
    FAIL("expected spec_error");
  } catch (const spec_error& e) {
    CHECK(e.violation() == SpecViolation::empty_f);
  }
  // 1/2 interior to an interval of F counts as membership.
  ParamSet band = ParamSet::normalize({}, {{Rat(2, 5), Rat(3, 5)}});
  CHECK_NOTHROW(validate_spec(band, half));
  try {
    validate_spec(band, pts({Rat(1, 4)}));
    FAIL("expected spec_error");
  } catch (const spec_error& e) {
    CHECK(e.violation() == SpecViolation::half_point);
  }
}

TEST_CASE("beta correspondence") {
  CHECK(beta_to_t(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t_to_beta(Rat(1, 3)) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
  CHECK(t_to_beta(Rat(1, 2)) == 0.0);
  // Strictly decreasing in t.
  CHECK(t_to_beta(Rat(1, 4)) > t_to_beta(Rat(1, 3)));
  CHECK(t_to_beta(Rat(2, 3)) < 0.0);
  // Round trip in t-coordinates over the whole beta range (the direction the
  // logistic map contracts).
  for (double beta : {-50.0, -20.0, -3.5, -1e-3, 0.0, 1e-3, 2.0, 20.0, 50.0}) {
    double t = beta_to_t(beta);
    CHECK(t > 0.0);
    CHECK(t < 1.0);
    CHECK(std::abs(beta_to_t(t_to_beta(t)) - t) < 1e-12);
  }
  // Round trip in beta-coordinates where it is well conditioned.
  for (double beta : {-8.0, -3.5, -1e-3, 0.0, 1e-3, 2.0, 8.0}) {
    CHECK(std::abs(t_to_beta(rat_from_double(beta_to_t(beta))) - beta) < 1e-12);
  }
  // Rationalization round trip is far tighter than the 1e-9 target.
  for (double beta : {-20.0, -5.0, 0.0, 0.25, 7.0, 20.0}) {
    Rat t = beta_to_t_rational(beta, 30);
    CHECK(std::abs(t_to_beta(t) - beta) < 1e-12);
  }
}

TEST_CASE("parameter sets from inverse-temperature sets") {
  BetaSetInput k0;
  k0.points.push_back(0.0);
  F1Construction c0 = f1_for_K(k0, 30);
  CHECK(c0.set == pts({Rat(1, 2)}));

  BetaSetInput kln2;
  kln2.points.push_back(std::log(2.0));
  F1Construction c1 = f1_for_K(kln2, 30);
  REQUIRE(c1.set.points().size() == 2);
  CHECK(c1.set.points()[1] == Rat(1, 2));
  CHECK(std::abs(t_to_beta(c1.set.points()[0]) - std::log(2.0)) < 1e-12);

  BetaSetInput kint;
  kint.intervals.push_back({-1.0, 1.0});
  F1Construction c2 = f1_for_K(kint, 30);
  // The t-image of [-1,1] covers 1/2, so the adjoined point is absorbed.
  REQUIRE(c2.set.intervals().size() == 1);
  CHECK(c2.set.points().empty());
  CHECK(c2.set.member(Rat(1, 2)));
  CHECK(std::abs(t_to_beta(c2.set.intervals()[0].lo) - 1.0) < 1e-12);
  CHECK(std::abs(t_to_beta(c2.set.intervals()[0].hi) + 1.0) < 1e-12);

  // Image description matches: beta_image inverts the construction.
  auto img = beta_image(c2.set);
  REQUIRE(img.size() == 1);
  CHECK_FALSE(img[0].is_point);
  CHECK(img[0].lo == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(img[0].hi == doctest::Approx(1.0).epsilon(1e-12));
}

}  // TEST_SUITE
