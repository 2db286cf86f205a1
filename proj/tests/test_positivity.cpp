#include "doctest.h"

#include "dglab/positivity.hpp"

using namespace dglab;

namespace {
ParamSet interval(long a, long b, long c, long d) {
  return ParamSet::normalize({}, {{Rat(a, b), Rat(c, d)}});
}
RingElement poly(std::initializer_list<long> c) {
  return RingElement::from_poly(IntPoly(c));
}
}  // namespace

TEST_SUITE("positivity") {

TEST_CASE("clear verdicts on points and intervals") {
  ParamSet half = ParamSet::normalize({Rat(1, 2)}, {});
  CHECK(is_positive_on(poly({0, 1}), half).verdict == Verdict::positive);
  CHECK(is_positive_on(poly({-1, 2}), half).verdict == Verdict::not_positive);
  CHECK(is_positive_on(poly({-1, 2}), interval(3, 5, 3, 4)).verdict ==
        Verdict::positive);
  CHECK(is_positive_on(poly({-1, 2}), interval(1, 4, 3, 4)).verdict ==
        Verdict::not_positive);
  CHECK(is_positive_on(poly({0, 1}), ParamSet()).verdict == Verdict::positive);
  CHECK(is_positive_on(RingElement(), half).verdict == Verdict::not_positive);
}

TEST_CASE("denominators never change the sign") {
  // t/( (1-t)^2 ) > 0 on (0,1); -(1)/(t) < 0.
  RingElement f = RingElement::canonical(IntPoly{0, 1}, 0, 2);
  CHECK(is_positive_on(f, interval(1, 10, 9, 10)).verdict == Verdict::positive);
  RingElement g = RingElement::canonical(IntPoly{-1}, 1, 0);
  auto cert = is_positive_on(g, interval(1, 10, 9, 10));
  CHECK(cert.verdict == Verdict::not_positive);
  REQUIRE(cert.witness_point.has_value());
  CHECK(g.eval(*cert.witness_point) <= Rat(0));
}

TEST_CASE("interior zeros are caught with verified witnesses") {
  RingElement f = poly({1, -5, 5});  // positive at 1/4 and 3/4, dips below between
  auto cert = is_positive_on(f, interval(1, 4, 3, 4));
  CHECK(cert.verdict == Verdict::not_positive);
  REQUIRE(cert.witness_point.has_value());
  CHECK(interval(1, 4, 3, 4).member(*cert.witness_point));
  CHECK(f.eval(*cert.witness_point) <= Rat(0));
  // Just left of the first zero (5 - sqrt 5)/10 = 0.2763...: still positive.
  CHECK(is_positive_on(f, interval(1, 4, 27, 100)).verdict == Verdict::positive);
}

TEST_CASE("touching zeros") {
  // (2t-1)^2 vanishes at the rational point 1/2.
  RingElement sq = poly({1, -4, 4});
  auto cert = is_positive_on(sq, interval(1, 4, 3, 4));
  CHECK(cert.verdict == Verdict::not_positive);
  REQUIRE(cert.witness_point.has_value());
  CHECK(*cert.witness_point == Rat(1, 2));
  // (5t^2-5t+1)^2 vanishes only at irrational points: the certificate is an
  // isolating interval where the squarefree part changes sign but the
  // polynomial itself stays positive at both ends.
  RingElement q = poly({1, -5, 5}) * poly({1, -5, 5});
  auto c2 = is_positive_on(q, interval(1, 4, 3, 4));
  CHECK(c2.verdict == Verdict::not_positive);
  if (!c2.witness_point.has_value()) {
    REQUIRE(c2.witness_interval.has_value());
    const auto& ev = *c2.witness_interval;
    CHECK(ev.sf_sign_lo * ev.sf_sign_hi < 0);
    CHECK(ev.f_sign_lo == 1);
    CHECK(ev.f_sign_hi == 1);
    CHECK(ev.lo < ev.hi);
  }
}

TEST_CASE("endpoint zero is a witness") {
  RingElement f = poly({-1, 2});  // zero at 1/2
  auto cert = is_positive_on(f, interval(1, 2, 3, 4));
  CHECK(cert.verdict == Verdict::not_positive);
  REQUIRE(cert.witness_point.has_value());
  CHECK(*cert.witness_point == Rat(1, 2));
}

TEST_CASE("cone membership includes zero") {
  ParamSet F = interval(1, 4, 3, 4);
  auto z = in_cone_GF(RingElement(), F);
  CHECK(z.member);
  CHECK_FALSE(z.cert.has_value());
  auto p = in_cone_GF(RingElement::one(), F);
  CHECK(p.member);
  REQUIRE(p.cert.has_value());
  CHECK(p.cert->verdict == Verdict::positive);
  auto n = in_cone_GF(poly({-1, 2}), F);
  CHECK_FALSE(n.member);
  REQUIRE(n.cert.has_value());
}

TEST_CASE("certified suprema") {
  RingElement t = poly({0, 1});
  auto [lo, hi] = sup_on(t, interval(1, 4, 1, 3), Rat(1, 1000));
  CHECK(lo < Rat(1, 3));
  CHECK(hi > Rat(1, 3));
  CHECK(hi - lo <= Rat(1, 1000));
  // Finite point sets give the exact maximum.
  ParamSet pts = ParamSet::normalize({Rat(1, 4), Rat(1, 3)}, {});
  auto [plo, phi] = sup_on(t, pts, Rat(1, 1000));
  CHECK(plo == Rat(1, 3));
  CHECK(phi == Rat(1, 3));
  // A rational function with its maximum at the right endpoint.
  RingElement w = RingElement::canonical(IntPoly{-1, 2}, 1, 1);
  auto [wlo, whi] = sup_on(w, interval(1, 4, 3, 4), Rat(1, 100));
  CHECK(wlo < Rat(8, 3));
  CHECK(whi > Rat(8, 3));
  CHECK(whi - wlo <= Rat(1, 100));
  CHECK_THROWS_AS(sup_on(t, ParamSet(), Rat(1, 10)), domain_error);
}

TEST_CASE("strict upper bounds") {
  RingElement t = poly({0, 1});
  CHECK(strict_upper_bound_on(Rat(2), t, interval(1, 4, 3, 4)));
  CHECK_FALSE(strict_upper_bound_on(Rat(1, 3), t, interval(1, 4, 1, 3)));
  CHECK(strict_upper_bound_on(Rat(9, 10), t, interval(1, 4, 3, 4)));
  CHECK_FALSE(strict_upper_bound_on(Rat(-1), t, interval(1, 4, 3, 4)));
}

}  // TEST_SUITE
