#include "doctest.h"

#include "dglab/serialization.hpp"

using namespace dglab;
using nlohmann::json;

namespace {
RingElement poly(std::initializer_list<long> c) {
  return RingElement::from_poly(IntPoly(c));
}
}  // namespace

TEST_SUITE("serialization") {

TEST_CASE("ring element round trip") {
  RingElement x = RingElement::canonical(IntPoly{-1, 2}, 1, 1);
  json j = ring_to_json(x);
  CHECK(j["num"] == json::array({"-1", "2"}));
  CHECK(j["t_pow"] == "1");
  CHECK(j["omt_pow"] == "1");
  CHECK(ring_from_json(j) == x);

  CHECK(ring_from_json(ring_to_json(RingElement())) == RingElement());
  RingElement big = RingElement::canonical(
      IntPoly(std::vector<Int>{Int("123456789012345678901"), Int(1)}), 3, 7);
  CHECK(ring_from_json(ring_to_json(big)) == big);
}

TEST_CASE("ring element lenient and strict parsing") {
  // Integer-typed coefficients and powers are accepted alongside strings.
  json j = {{"num", {1, "2"}}, {"t_pow", 0}, {"omt_pow", "0"}};
  CHECK(ring_from_json(j) == poly({1, 2}));

  // A reducible fraction t*(...)/t normalizes leniently, strict mode rejects.
  json red = {{"num", {"0", "3"}}, {"t_pow", "1"}, {"omt_pow", "0"}};
  CHECK(ring_from_json(red) == poly({3}));
  ParseOptions strict{true, {}};
  CHECK_THROWS_AS(ring_from_json(red, strict), parse_error);

  json neg = {{"num", {"1"}}, {"t_pow", "-1"}, {"omt_pow", "0"}};
  CHECK_THROWS_AS(ring_from_json(neg), parse_error);
  json junk = {{"num", {"1x"}}, {"t_pow", "0"}, {"omt_pow", "0"}};
  CHECK_THROWS_AS(ring_from_json(junk), parse_error);
  CHECK_THROWS_AS(ring_from_json(json::array()), parse_error);
}

TEST_CASE("group element round trip") {
  GroupElement x;
  x.set_entry(-2, poly({0, 3}));
  x.set_entry(1, RingElement::canonical(IntPoly{1}, 1, 2));
  json j = group_to_json(x);
  CHECK(group_from_json(j) == x);
  CHECK(group_from_json(group_to_json(GroupElement())) == GroupElement());

  // A stored zero entry is dropped leniently and rejected strictly.
  json withzero = j;
  withzero["entries"]["5"] = ring_to_json(RingElement());
  CHECK(group_from_json(withzero) == x);
  ParseOptions strict{true, {}};
  CHECK_THROWS_AS(group_from_json(withzero, strict), parse_error);
  json badkey = {{"entries", {{"two", ring_to_json(poly({1}))}}}};
  CHECK_THROWS_AS(group_from_json(badkey), parse_error);
}

TEST_CASE("parameter sets and rationals") {
  ParamSet s = ParamSet::normalize({Rat(1, 2)}, {{Rat(1, 4), Rat(1, 3)}});
  json j = param_set_to_json(s);
  CHECK(param_set_from_json(j) == s);

  // Unreduced fractions parse to the same value with a strict-mode warning.
  json half = {{"points", {"2/4"}}, {"intervals", json::array()}};
  ParamSet lenient = param_set_from_json(half);
  CHECK(lenient == ParamSet::normalize({Rat(1, 2)}, {}));
  ParseOptions strict{true, {}};
  ParamSet strict_set = param_set_from_json(half, strict);
  CHECK(strict_set == lenient);
  REQUIRE(strict.warnings.size() == 1);
  CHECK(strict.warnings[0].find("2/4") != std::string::npos);

  json bad = {{"points", {"1/0"}}, {"intervals", json::array()}};
  CHECK_THROWS_AS(param_set_from_json(bad), parse_error);
  json outside = {{"points", {"3/2"}}, {"intervals", json::array()}};
  CHECK_THROWS_AS(param_set_from_json(outside), domain_error);
}

TEST_CASE("kms spec validation happens at parse time") {
  KmsSpec sp = validate_spec(ParamSet::normalize({Rat(1, 2)}, {}),
                             ParamSet::normalize({Rat(1, 2)}, {}));
  json j = kms_spec_to_json(sp);
  KmsSpec back = kms_spec_from_json(j);
  CHECK(back.F == sp.F);
  CHECK(back.F1 == sp.F1);

  // 1/2 in F without 1/2 in F1 violates the half-point rule.
  json bad;
  bad["F"] = {{"points", {"1/2", "1/3"}}, {"intervals", json::array()}};
  bad["F1"] = {{"points", {"1/3"}}, {"intervals", json::array()}};
  CHECK_THROWS_AS(kms_spec_from_json(bad), spec_error);

  json empty;
  empty["F"] = {{"points", json::array()}, {"intervals", json::array()}};
  empty["F1"] = empty["F"];
  CHECK_THROWS_AS(kms_spec_from_json(empty), spec_error);
}

TEST_CASE("sandwich problems") {
  SandwichProblem p;
  p.constraints.push_back({poly({0}), RingElement::one(), poly({2})});
  p.constraints.push_back(
      {poly({-1}), RingElement::canonical(IntPoly{-1, 2}, 1, 1), poly({1})});
  p.set = ParamSet::normalize({Rat(1, 2)}, {{Rat(3, 5), Rat(7, 10)}});
  p.max_degree = 12;
  json j = sandwich_problem_to_json(p);
  SandwichProblem q = sandwich_problem_from_json(j);
  REQUIRE(q.constraints.size() == 2);
  CHECK(q.constraints[0].lower == p.constraints[0].lower);
  CHECK(q.constraints[1].weight == p.constraints[1].weight);
  CHECK(q.constraints[1].upper == p.constraints[1].upper);
  CHECK(q.set == p.set);
  CHECK(q.max_degree == 12);

  // A missing weight means weight 1.
  json light;
  light["set"] = {{"points", {"1/2"}}, {"intervals", json::array()}};
  light["constraints"] = json::array();
  light["constraints"].push_back(
      {{"lower", ring_to_json(poly({0}))}, {"upper", ring_to_json(poly({2}))}});
  SandwichProblem r = sandwich_problem_from_json(light);
  REQUIRE(r.constraints.size() == 1);
  CHECK(r.constraints[0].weight == RingElement::one());

  json huge = j;
  huge["max_degree"] = 100000;
  CHECK_THROWS_AS(sandwich_problem_from_json(huge), parse_error);
}

TEST_CASE("measures") {
  ParamSet F = ParamSet::normalize({Rat(1, 3), Rat(1, 2)}, {});
  AtomicMeasure m(F, {{Rat(1, 3), Rat(1)}, {Rat(1, 2), Rat(2, 5)}});
  json j = measure_to_json(m);
  AtomicMeasure back = measure_from_json(j);
  CHECK(back.domain() == m.domain());
  CHECK(back.atoms() == m.atoms());

  json bad = j;
  bad["atoms"][0][1] = "0";
  CHECK_THROWS_AS(measure_from_json(bad), domain_error);
}

TEST_CASE("document level errors carry byte offsets") {
  CHECK_THROWS_AS(parse_json_text("{\"num\": [,]}"), parse_error);
  long offset = -1;
  try {
    parse_json_text("[1, 2,");
  } catch (const parse_error& e) {
    offset = e.offset();
  }
  CHECK(offset >= 6);

  json j = parse_json_text("{\"t_pow\": \"1\", \"omt_pow\": \"0\", \"num\": [\"0\", \"1\"]}");
  CHECK(ring_from_json(j) == RingElement::one());

  // dump then reparse is the identity on values.
  json doc = kms_spec_to_json(validate_spec(ParamSet::normalize({Rat(1, 2)}, {}),
                                            ParamSet::normalize({Rat(1, 2)}, {})));
  CHECK(parse_json_text(dump_json(doc)) == doc);
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), parse_error);
}

}  // TEST_SUITE
