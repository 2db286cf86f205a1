#include "dglab/serialization.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace dglab {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw parse_error(what); }

std::string int_to_string(const Int& v) { return v.get_str(); }

Int int_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.empty()) fail(where + ": empty integer literal");
    std::size_t pos = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (pos == s.size()) fail(where + ": bad integer literal '" + s + "'");
    for (std::size_t i = pos; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        fail(where + ": bad integer literal '" + s + "'");
    return Int(s, 10);
  }
  fail(where + ": expected an integer or a decimal string");
}

Rat rat_from_json(const json& j, const std::string& where, const ParseOptions& opt) {
  std::string s;
  if (j.is_number_integer())
    s = std::to_string(j.get<long long>());
  else if (j.is_string())
    s = j.get<std::string>();
  else
    fail(where + ": expected a rational as a 'num/den' string");
  Rat v;
  try {
    v = rat_from_string(s);
  } catch (const parse_error& e) {
    throw parse_error(where + ": " + e.what());
  }
  if (opt.strict && rat_to_string(v) != s)
    opt.warnings.push_back(where + ": rational '" + s + "' normalized to '" +
               rat_to_string(v) + "'");
  return v;
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing field '" + std::string(key) + "'");
  return *it;
}

unsigned pow_from_json(const json& j, const std::string& where) {
  Int v = int_from_json(j, where);
  if (sgn(v) < 0) fail(where + ": exponent must be nonnegative");
  if (!v.fits_ulong_p()) fail(where + ": exponent out of range");
  return static_cast<unsigned>(v.get_ui());
}

}  // namespace

json ring_to_json(const RingElement& x) {
  json num = json::array();
  for (const Int& c : x.num().coeffs()) num.push_back(int_to_string(c));
  return json{{"num", std::move(num)},
        {"t_pow", std::to_string(x.t_pow())},
        {"omt_pow", std::to_string(x.omt_pow())}};
}

RingElement ring_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "ring element";
  const json& jnum = need(j, "num", where);
  if (!jnum.is_array()) fail(where + ": 'num' must be an array of integers");
  std::vector<Int> coeffs;
  coeffs.reserve(jnum.size());
  for (const json& c : jnum) coeffs.push_back(int_from_json(c, where + " coefficient"));
  unsigned a = pow_from_json(need(j, "t_pow", where), where + " t_pow");
  unsigned b = pow_from_json(need(j, "omt_pow", where), where + " omt_pow");
  IntPoly num{std::move(coeffs)};
  RingElement x = RingElement::canonical(num, a, b);
  if (opt.strict && (x.num() != num || x.t_pow() != a || x.omt_pow() != b))
    fail(where + ": not in canonical form (strict mode); canonical is " +
      x.to_string());
  return x;
}

json group_to_json(const GroupElement& x) {
  json entries = json::object();
  for (const auto& [n, v] : x.entries()) entries[std::to_string(n)] = ring_to_json(v);
  return json{{"entries", std::move(entries)}};
}

GroupElement group_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "group element";
  const json& entries = need(j, "entries", where);
  if (!entries.is_object()) fail(where + ": 'entries' must be an object");
  GroupElement x;
  for (auto it = entries.begin(); it != entries.end(); ++it) {
    long n = 0;
    try {
      std::size_t used = 0;
      n = std::stol(it.key(), &used);
      if (used != it.key().size()) fail("");
    } catch (...) {
      fail(where + ": bad index '" + it.key() + "'");
    }
    RingElement v = ring_from_json(it.value(), opt);
    if (x.entries().count(n)) fail(where + ": duplicate index " + std::to_string(n));
    if (v.is_zero()) {
      if (opt.strict)
        fail(where + ": zero entry at index " + std::to_string(n) +
          " (strict mode)");
      continue;
    }
    x.set_entry(n, std::move(v));
  }
  return x;
}

json param_set_to_json(const ParamSet& s) {
  json points = json::array();
  for (const Rat& p : s.points()) points.push_back(rat_to_string(p));
  json intervals = json::array();
  for (const Interval& iv : s.intervals())
    intervals.push_back(json::array({rat_to_string(iv.lo), rat_to_string(iv.hi)}));
  return json{{"points", std::move(points)}, {"intervals", std::move(intervals)}};
}

ParamSet param_set_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "parameter set";
  if (!j.is_object()) fail(where + ": expected an object");
  std::vector<Rat> points;
  std::vector<std::pair<Rat, Rat>> intervals;
  if (auto it = j.find("points"); it != j.end()) {
    if (!it->is_array()) fail(where + ": 'points' must be an array");
    for (const json& p : *it) points.push_back(rat_from_json(p, where + " point", opt));
  }
  if (auto it = j.find("intervals"); it != j.end()) {
    if (!it->is_array()) fail(where + ": 'intervals' must be an array");
    for (const json& iv : *it) {
      if (!iv.is_array() || iv.size() != 2)
        fail(where + ": each interval must be a [lo, hi] pair");
      Rat lo = rat_from_json(iv[0], where + " interval endpoint", opt);
      Rat hi = rat_from_json(iv[1], where + " interval endpoint", opt);
      intervals.emplace_back(std::move(lo), std::move(hi));
    }
  }
  return ParamSet::normalize(std::move(points), std::move(intervals));
}

json kms_spec_to_json(const KmsSpec& s) {
  return json{{"F", param_set_to_json(s.F)}, {"F1", param_set_to_json(s.F1)}};
}

KmsSpec kms_spec_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "spec";
  ParamSet F = param_set_from_json(need(j, "F", where), opt);
  ParamSet F1 = param_set_from_json(need(j, "F1", where), opt);
  return validate_spec(F, F1);
}

json sandwich_problem_to_json(const SandwichProblem& p) {
  json constraints = json::array();
  for (const SandwichConstraint& c : p.constraints)
    constraints.push_back(json{{"lower", ring_to_json(c.lower)},
                 {"weight", ring_to_json(c.weight)},
                 {"upper", ring_to_json(c.upper)}});
  json out{{"constraints", std::move(constraints)},
      {"set", param_set_to_json(p.set)}};
  if (p.max_degree > 0) out["max_degree"] = p.max_degree;
  if (p.max_iterations > 0) out["max_iterations"] = p.max_iterations;
  return out;
}

SandwichProblem sandwich_problem_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "sandwich problem";
  SandwichProblem p;
  const json& jc = need(j, "constraints", where);
  if (!jc.is_array() || jc.empty())
    fail(where + ": 'constraints' must be a non-empty array");
  for (const json& c : jc) {
    SandwichConstraint sc;
    sc.lower = ring_from_json(need(c, "lower", where + " constraint"), opt);
    if (auto it = c.find("weight"); it != c.end() && !it->is_null())
      sc.weight = ring_from_json(*it, opt);
    else
      sc.weight = RingElement::one();
    sc.upper = ring_from_json(need(c, "upper", where + " constraint"), opt);
    p.constraints.push_back(std::move(sc));
  }
  p.set = param_set_from_json(need(j, "set", where), opt);
  if (auto it = j.find("max_degree"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0 ||
      it->get<long long>() > 4096)
      fail(where + ": 'max_degree' must be an integer in [0, 4096]");
    p.max_degree = static_cast<int>(it->get<long long>());
  }
  if (auto it = j.find("max_iterations"); it != j.end()) {
    if (!it->is_number_integer() || it->get<long long>() < 0)
      fail(where + ": 'max_iterations' must be a nonnegative integer");
    p.max_iterations = static_cast<int>(it->get<long long>());
  }
  return p;
}

json measure_to_json(const AtomicMeasure& m) {
  json atoms = json::array();
  for (const auto& [t0, w] : m.atoms())
    atoms.push_back(json::array({rat_to_string(t0), rat_to_string(w)}));
  return json{{"F", param_set_to_json(m.domain())}, {"atoms", std::move(atoms)}};
}

AtomicMeasure measure_from_json(const json& j, const ParseOptions& opt) {
  const std::string where = "measure";
  ParamSet F = param_set_from_json(need(j, "F", where), opt);
  const json& ja = need(j, "atoms", where);
  if (!ja.is_array()) fail(where + ": 'atoms' must be an array");
  std::vector<std::pair<Rat, Rat>> atoms;
  for (const json& a : ja) {
    if (!a.is_array() || a.size() != 2)
      fail(where + ": each atom must be a [point, weight] pair");
    Rat t0 = rat_from_json(a[0], where + " atom point", opt);
    Rat w = rat_from_json(a[1], where + " atom weight", opt);
    atoms.emplace_back(std::move(t0), std::move(w));
  }
  return AtomicMeasure(std::move(F), std::move(atoms));
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what(),
             static_cast<long>(e.byte));
  }
}

std::string dump_json(const json& j) { return j.dump(2); }

json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

}  // namespace dglab
