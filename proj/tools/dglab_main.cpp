#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "dglab/k_theory.hpp"
#include "dglab/riesz.hpp"
#include "dglab/serialization.hpp"
#include "dglab/traces.hpp"
#include "dglab/verify.hpp"

using namespace dglab;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitInternal = 5;

struct Options {
  std::string format = "text";
  int precision = 30;
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const json& j, const std::string& text) {
  if (opt.json()) {
    std::cout << dump_json(j) << "\n";
  } else {
    std::cout << text;
  }
}

std::string poly_to_display(const IntPoly& p) {
  return RingElement::from_poly(p).to_string();
}

json poly_to_json(const IntPoly& p) {
  return ring_to_json(RingElement::from_poly(p));
}

json cert_to_json(const PositivityCertificate& c) {
  json j;
  j["verdict"] = c.verdict == Verdict::positive ? "POSITIVE" : "NOT_POSITIVE";
  if (c.witness_point) j["witness_point"] = rat_to_string(*c.witness_point);
  if (c.witness_interval) {
    j["witness_interval"] = {{"lo", rat_to_string(c.witness_interval->lo)},
                             {"hi", rat_to_string(c.witness_interval->hi)},
                             {"f_sign_lo", c.witness_interval->f_sign_lo},
                             {"f_sign_hi", c.witness_interval->f_sign_hi},
                             {"sf_sign_lo", c.witness_interval->sf_sign_lo},
                             {"sf_sign_hi", c.witness_interval->sf_sign_hi}};
  }
  j["components_examined"] = c.trace.size();
  return j;
}

json stats_to_json(const SandwichStats& s) {
  return {{"degree_used", s.degree_used},
          {"grids_tried", s.grids_tried},
          {"lp_calls", s.lp_calls},
          {"candidates_tested", s.candidates_tested}};
}

json membership_to_json(const GPlusResult& m) {
  json j;
  j["member"] = m.member;
  if (m.cert_f) j["alpha_sum_on_F"] = cert_to_json(*m.cert_f);
  if (m.cert_f1) j["plain_sum_on_F1"] = cert_to_json(*m.cert_f1);
  return j;
}

// Inverse-temperature set input {"points":[0.5,...], "intervals":[[a,b],...]}
// converted to the exact parameter-space preimage (order reversing).
ParamSet beta_set_to_param(const json& j, int precision) {
  if (!j.is_object()) throw parse_error("beta set must be a JSON object");
  BetaSetInput in;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) in.points.push_back(p.get<double>());
  }
  if (j.contains("intervals")) {
    for (const auto& iv : j.at("intervals")) {
      in.intervals.emplace_back(iv.at(0).get<double>(), iv.at(1).get<double>());
    }
  }
  std::vector<Rat> pts;
  std::vector<std::pair<Rat, Rat>> ivs;
  for (double b : in.points) pts.push_back(beta_to_t_rational(b, precision));
  for (const auto& [blo, bhi] : in.intervals) {
    ivs.emplace_back(beta_to_t_rational(bhi, precision),
                     beta_to_t_rational(blo, precision));
  }
  return ParamSet::normalize(std::move(pts), std::move(ivs));
}

int cmd_positivity_check(const Options& opt, const std::string& elem_path,
                         const std::string& set_path, const std::string& beta_path) {
  RingElement f = ring_from_json(load_json_file(elem_path));
  ParamSet S;
  if (!set_path.empty()) {
    S = param_set_from_json(load_json_file(set_path));
  } else if (!beta_path.empty()) {
    S = beta_set_to_param(load_json_file(beta_path), opt.precision);
  } else {
    throw parse_error("one of --set/--t-set or --beta-set is required");
  }
  PositivityCertificate cert = is_positive_on(f, S);
  json j;
  j["element"] = ring_to_json(f);
  j["set"] = param_set_to_json(S);
  j["certificate"] = cert_to_json(cert);
  std::string text = "element: " + f.to_string() + "\nset: " + S.to_string() +
                     "\nverdict: " + cert.summary() + "\n";
  emit(opt, j, text);
  return cert.verdict == Verdict::positive ? kExitOk : kExitNegative;
}

int cmd_sandwich_solve(const Options& opt, const std::string& problem_path) {
  SandwichProblem p = sandwich_problem_from_json(load_json_file(problem_path));
  SandwichResult r = solve_sandwich(p);
  json j;
  j["a"] = poly_to_json(r.a);
  j["stats"] = stats_to_json(r.stats);
  j["lower_certificates"] = json::array();
  j["upper_certificates"] = json::array();
  for (const auto& c : r.lower_certs) j["lower_certificates"].push_back(cert_to_json(c));
  for (const auto& c : r.upper_certs) j["upper_certificates"].push_back(cert_to_json(c));
  std::string text = "a = " + poly_to_display(r.a) + "\ndegree used: " +
                     std::to_string(r.stats.degree_used) + "\n";
  for (std::size_t i = 0; i < r.lower_certs.size(); ++i) {
    text += "constraint " + std::to_string(i) +
            " lower: " + r.lower_certs[i].summary() + "\n";
    text += "constraint " + std::to_string(i) +
            " upper: " + r.upper_certs[i].summary() + "\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_riesz(const Options& opt, const std::string& x1p, const std::string& x2p,
              const std::string& y1p, const std::string& y2p, const std::string& specp,
              int max_degree) {
  GroupElement x1 = group_from_json(load_json_file(x1p));
  GroupElement x2 = group_from_json(load_json_file(x2p));
  GroupElement y1 = group_from_json(load_json_file(y1p));
  GroupElement y2 = group_from_json(load_json_file(y2p));
  KmsSpec spec = kms_spec_from_json(load_json_file(specp));
  RieszWitness w = interpolate(x1, x2, y1, y2, spec, max_degree);
  json j;
  j["z"] = group_to_json(w.z);
  j["a"] = poly_to_json(w.a);
  j["b"] = poly_to_json(w.b);
  j["degenerate"] = w.degenerate;
  j["memberships"] = json::array();
  for (const auto& m : w.memberships) j["memberships"].push_back(membership_to_json(m));
  std::string text = "z = " + w.z.to_string() + "\na = " + poly_to_display(w.a) +
                     "\nb = " + poly_to_display(w.b) + "\n";
  if (w.degenerate) text += "degenerate: a lower input equals an upper input\n";
  static const char* kNames[4] = {"z - x1", "z - x2", "y1 - z", "y2 - z"};
  for (int i = 0; i < 4; ++i) {
    text += std::string(kNames[i]) + ": " +
            (w.memberships[i].member ? "in cone" : "NOT in cone") + "\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_coker_solve(const Options& opt, const std::string& elem_path) {
  GroupElement x = group_from_json(load_json_file(elem_path));
  GroupElement y = solve_coboundary(x);
  json j;
  j["y"] = group_to_json(y);
  emit(opt, j, "y = " + y.to_string() + "\n");
  return kExitOk;
}

int cmd_coker_in_image(const Options& opt, const std::string& elem_path) {
  GroupElement x = group_from_json(load_json_file(elem_path));
  ImageCheck c = in_image_id_minus_gamma(x);
  json j;
  j["in_image"] = c.in_image;
  j["defect"] = ring_to_json(c.defect);
  std::string text = std::string("in image: ") + (c.in_image ? "yes" : "no") +
                     "\ndefect (alpha sum): " + c.defect.to_string() + "\n";
  emit(opt, j, text);
  return c.in_image ? kExitOk : kExitNegative;
}

int cmd_coker_s_map(const Options& opt, const std::string& elem_path) {
  GroupElement x = group_from_json(load_json_file(elem_path));
  QuotientClass q = class_of(x);
  json j;
  j["value"] = ring_to_json(q.value);
  emit(opt, j, "s(x) = " + q.value.to_string() + "\n");
  return kExitOk;
}

int cmd_coker_positive_rep(const Options& opt, const std::string& elem_path,
                           const std::string& spec_path, int max_degree) {
  GroupElement x = group_from_json(load_json_file(elem_path));
  KmsSpec spec = kms_spec_from_json(load_json_file(spec_path));
  PositiveRep rep = positive_representative(x, spec, max_degree);
  json j;
  j["y"] = group_to_json(rep.y);
  j["b"] = poly_to_json(rep.b);
  j["stats"] = stats_to_json(rep.stats);
  std::string text = "y = " + rep.y.to_string() + "\nb = " + poly_to_display(rep.b) +
                     "\n";
  emit(opt, j, text);
  return kExitOk;
}

std::string beta_range_display(const BetaComponent& c) {
  char buf[128];
  if (c.is_point) {
    std::snprintf(buf, sizeof buf, "beta = %.12g", c.lo);
  } else {
    std::snprintf(buf, sizeof buf, "beta in [%.12g, %.12g]", c.lo, c.hi);
  }
  return buf;
}

int cmd_kms_spectrum(const Options& opt, const std::string& spec_path) {
  KmsSpec spec = kms_spec_from_json(load_json_file(spec_path));
  std::vector<BetaComponent> comps = kms_spectrum(spec);
  json j;
  j["components"] = json::array();
  std::string text = "inverse temperature spectrum: " + std::to_string(comps.size()) +
                     " component(s)\n";
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const BetaComponent& c = comps[i];
    j["components"].push_back({{"is_point", c.is_point},
                               {"beta_lo", c.lo},
                               {"beta_hi", c.hi},
                               {"t_lo", rat_to_string(c.t_lo)},
                               {"t_hi", rat_to_string(c.t_hi)}});
    text += "component " + std::to_string(i) + ": " + beta_range_display(c) +
            ", t in [" + rat_to_string(c.t_lo) + ", " + rat_to_string(c.t_hi) + "]\n";
  }
  emit(opt, j, text);
  return kExitOk;
}

int cmd_kms_classify(const Options& opt, const std::string& s_text,
                     const std::string& spec_path) {
  Rat s = rat_from_string(s_text);
  KmsSpec spec = kms_spec_from_json(load_json_file(spec_path));
  auto tr = classify_eigenfunctional(s, spec);
  json j;
  j["s"] = rat_to_string(s);
  if (tr) {
    j["carried"] = true;
    j["kind"] = tr->kind == TraceKind::plain ? "PLAIN" : "TWISTED";
    j["t0"] = rat_to_string(tr->t0);
    emit(opt, j,
         "eigenvalue " + rat_to_string(s) + " is carried by the PLAIN trace at t0 = " +
             rat_to_string(tr->t0) + "\n");
    return kExitOk;
  }
  j["carried"] = false;
  emit(opt, j,
       "no point functional scales by " + rat_to_string(s) +
           " (the matching parameter lies outside F1)\n");
  return kExitNegative;
}

int cmd_kms_trace(const Options& opt, const std::string& measure_path,
                  const std::string& elem_path) {
  AtomicMeasure m = measure_from_json(load_json_file(measure_path));
  GroupElement x = group_from_json(load_json_file(elem_path));
  Rat v = measure_trace(m, x);
  json j;
  j["value"] = rat_to_string(v);
  emit(opt, j, "trace value = " + rat_to_string(v) + "\n");
  return kExitOk;
}

int cmd_verify(const Options& opt, std::uint64_t seed, const std::string& scale_text) {
  VerifyReport r = run_verify(seed, parse_scale(scale_text));
  emit(opt, report_to_json(r), report_to_text(r));
  return r.total_failures() == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the ordered K-theory of flows"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--precision", opt.precision,
                 "decimal digits when rationalizing beta coordinates")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();

  std::string elem_path, set_path, beta_path, problem_path, spec_path;
  std::string x1p, x2p, y1p, y2p, measure_path, s_text;
  int max_degree = 0;
  std::uint64_t seed = 0;
  std::string scale_text = "small";

  CLI::App* positivity = app.add_subcommand("positivity", "positivity certificates");
  CLI::App* pos_check = positivity->add_subcommand("check", "decide f > 0 on a set");
  pos_check->add_option("--elem", elem_path, "ring element file")->required();
  pos_check->add_option("--set,--t-set", set_path, "parameter set file (t space)");
  pos_check->add_option("--beta-set", beta_path,
                        "parameter set file (inverse temperature space)");

  CLI::App* sandwich = app.add_subcommand("sandwich", "integer polynomial sandwiches");
  CLI::App* sand_solve =
      sandwich->add_subcommand("solve", "find a with lower < weight*a < upper");
  sand_solve->add_option("--problem", problem_path, "problem file")->required();

  CLI::App* riesz = app.add_subcommand("riesz", "Riesz interpolation");
  CLI::App* riesz_int =
      riesz->add_subcommand("interpolate", "find z between two pairs");
  riesz_int->add_option("--x1", x1p, "lower element file")->required();
  riesz_int->add_option("--x2", x2p, "lower element file")->required();
  riesz_int->add_option("--y1", y1p, "upper element file")->required();
  riesz_int->add_option("--y2", y2p, "upper element file")->required();
  riesz_int->add_option("--spec", spec_path, "(F, F1) spec file")->required();
  riesz_int->add_option("--max-degree", max_degree, "search degree cap (0 = default)");

  CLI::App* coker = app.add_subcommand("coker", "the cokernel of id - gamma");
  CLI::App* ck_solve = coker->add_subcommand("solve", "solve x = y - gamma(y)");
  ck_solve->add_option("--elem", elem_path, "group element file")->required();
  CLI::App* ck_img = coker->add_subcommand("in-image", "test membership in the image");
  ck_img->add_option("--elem", elem_path, "group element file")->required();
  CLI::App* ck_smap = coker->add_subcommand("s-map", "class value under the alpha sum");
  ck_smap->add_option("--elem", elem_path, "group element file")->required();
  CLI::App* ck_rep =
      coker->add_subcommand("positive-rep", "positive representative of a class");
  ck_rep->add_option("--elem", elem_path, "group element file")->required();
  ck_rep->add_option("--spec", spec_path, "(F, F1) spec file")->required();
  ck_rep->add_option("--max-degree", max_degree, "search degree cap (0 = default)");

  CLI::App* kms = app.add_subcommand("kms", "inverse temperature analysis");
  CLI::App* kms_spec = kms->add_subcommand("spectrum", "the admissible beta set");
  kms_spec->add_option("--spec", spec_path, "(F, F1) spec file")->required();
  CLI::App* kms_cls =
      kms->add_subcommand("classify", "point functional scaling by a given s");
  kms_cls->add_option("--s", s_text, "eigenvalue (rational, s > 0, s != 1)")->required();
  kms_cls->add_option("--spec", spec_path, "(F, F1) spec file")->required();
  CLI::App* kms_tr = kms->add_subcommand("trace", "apply an atomic measure trace");
  kms_tr->add_option("--measure", measure_path, "measure file")->required();
  kms_tr->add_option("--elem", elem_path, "group element file")->required();

  CLI::App* verify = app.add_subcommand("verify", "randomized lemma replay harness");
  verify->add_option("--seed", seed, "master seed")->capture_default_str();
  verify->add_option("--scale", scale_text, "small, medium, or large")
      ->check(CLI::IsMember({"small", "medium", "large"}))
      ->capture_default_str();

  for (CLI::App* sc : {positivity, pos_check, sandwich, sand_solve, riesz, riesz_int,
                       coker, ck_solve, ck_img, ck_smap, ck_rep, kms, kms_spec, kms_cls,
                       kms_tr, verify}) {
    sc->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pos_check->parsed()) {
      return cmd_positivity_check(opt, elem_path, set_path, beta_path);
    }
    if (sand_solve->parsed()) return cmd_sandwich_solve(opt, problem_path);
    if (riesz_int->parsed()) {
      return cmd_riesz(opt, x1p, x2p, y1p, y2p, spec_path, max_degree);
    }
    if (ck_solve->parsed()) return cmd_coker_solve(opt, elem_path);
    if (ck_img->parsed()) return cmd_coker_in_image(opt, elem_path);
    if (ck_smap->parsed()) return cmd_coker_s_map(opt, elem_path);
    if (ck_rep->parsed()) {
      return cmd_coker_positive_rep(opt, elem_path, spec_path, max_degree);
    }
    if (kms_spec->parsed()) return cmd_kms_spectrum(opt, spec_path);
    if (kms_cls->parsed()) return cmd_kms_classify(opt, s_text, spec_path);
    if (kms_tr->parsed()) return cmd_kms_trace(opt, measure_path, elem_path);
    if (verify->parsed()) return cmd_verify(opt, seed, scale_text);
    std::cerr << "error: no subcommand given\n";
    return kExitUsage;
  } catch (const search_exhausted_error& e) {
    std::cerr << "search exhausted: " << e.what() << "\n";
    return kExitExhausted;
  } catch (const infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitNegative;
  } catch (const half_point_infeasible_error& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitNegative;
  } catch (const precondition_error& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitNegative;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const spec_error& e) {
    std::cerr << "invalid spec: " << e.what() << "\n";
    return kExitUsage;
  } catch (const domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const limit_error& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
