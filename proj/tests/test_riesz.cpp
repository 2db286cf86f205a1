#include "doctest.h"

#include "dglab/riesz.hpp"

using namespace dglab;

namespace {
RingElement poly(std::initializer_list<long> c) {
  return RingElement::from_poly(IntPoly(c));
}
KmsSpec spec_half() {
  ParamSet half = ParamSet::normalize({Rat(1, 2)}, {});
  return validate_spec(half, half);
}
void verify_all(const RieszWitness& w, const GroupElement& x1, const GroupElement& x2,
                const GroupElement& y1, const GroupElement& y2, const KmsSpec& spec) {
  CHECK(in_G_plus(w.z - x1, spec).member);
  CHECK(in_G_plus(w.z - x2, spec).member);
  CHECK(in_G_plus(y1 - w.z, spec).member);
  CHECK(in_G_plus(y2 - w.z, spec).member);
  for (const auto& m : w.memberships) CHECK(m.member);
  CHECK(w.z.min_index() >= -1);
  CHECK(w.z.max_index() <= 1);
}
}  // namespace

TEST_SUITE("riesz") {

TEST_CASE("interpolation between zero and a constant") {
  KmsSpec sh = spec_half();
  GroupElement zero;
  GroupElement two = GroupElement::single(poly({2}));
  RieszWitness w = interpolate(zero, zero, two, two, sh);
  CHECK(w.z == GroupElement::single(RingElement::one()));
  CHECK(w.a == IntPoly{1});
  CHECK(w.b.is_zero());
  CHECK_FALSE(w.degenerate);
  verify_all(w, zero, zero, two, two, sh);
}

TEST_CASE("equal pair short circuits") {
  KmsSpec sh = spec_half();
  GroupElement one = GroupElement::single(RingElement::one());
  GroupElement two = GroupElement::single(poly({2}));
  RieszWitness w = interpolate(one, GroupElement(), one, two, sh);
  CHECK(w.degenerate);
  CHECK(w.z == one);
  verify_all(w, one, GroupElement(), one, two, sh);
}

TEST_CASE("four distinct elements over an interval") {
  ParamSet band = ParamSet::normalize({}, {{Rat(1, 3), Rat(2, 5)}});
  KmsSpec spec = validate_spec(band, band);
  GroupElement x1;
  GroupElement x2 = GroupElement::single(poly({-1, 1}));  // t - 1 < 0
  GroupElement y1 = GroupElement::single(RingElement::one());
  GroupElement y2 = GroupElement::single(poly({2}));
  RieszWitness w = interpolate(x1, x2, y1, y2, spec);
  verify_all(w, x1, x2, y1, y2, spec);
}

TEST_CASE("nonzero correction polynomial") {
  // F reaches away from 1/2, so the alpha-sums of the bounds differ from the
  // plain sums and b = 0 cannot satisfy step (c).
  ParamSet F = ParamSet::normalize({Rat(1, 2)}, {{Rat(3, 5), Rat(13, 20)}});
  ParamSet F1 = ParamSet::normalize({Rat(1, 2)}, {});
  KmsSpec spec = validate_spec(F, F1);
  GroupElement x = GroupElement::triple(RingElement(), RingElement::one());
  GroupElement y = GroupElement::single(poly({2}));
  REQUIRE(in_G_plus(y - x, spec).member);
  RieszWitness w = interpolate(x, x, y, y, spec);
  CHECK_FALSE(w.b.is_zero());
  verify_all(w, x, x, y, y, spec);
}

TEST_CASE("empty F1 anchors the middle step inside F") {
  ParamSet F = ParamSet::normalize({}, {{Rat(3, 5), Rat(7, 10)}});
  KmsSpec spec = validate_spec(F, ParamSet());
  GroupElement zero;
  GroupElement y = GroupElement::single(RingElement::one());
  RieszWitness w = interpolate(zero, zero, y, y, spec);
  verify_all(w, zero, zero, y, y, spec);
}

TEST_CASE("violated preconditions name the failing pair") {
  KmsSpec sh = spec_half();
  GroupElement zero;
  GroupElement two = GroupElement::single(poly({2}));
  CHECK_THROWS_AS(interpolate(two, two, zero, zero, sh), precondition_error);
  try {
    interpolate(zero, two, two, zero, sh);
  } catch (const precondition_error& e) {
    CHECK(std::string(e.what()).find("y2") != std::string::npos);
  }
}

}  // TEST_SUITE
