#include "dglab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "dglab/k_theory.hpp"
#include "dglab/riesz.hpp"
#include "dglab/testgen.hpp"
#include "dglab/traces.hpp"

namespace dglab {

namespace {

std::string hex_seed(std::uint64_t s) {
  std::ostringstream os;
  os << "0x" << std::hex << s;
  return os.str();
}

struct SuiteRun {
  SuiteReport rep;
  std::uint64_t master;

  std::uint64_t instance_seed(int i) const {
    return suite_seed(master, rep.name + "#" + std::to_string(i));
  }

  void fail(int i, const std::string& msg) {
    ++rep.failures;
    if (rep.failure_notes.size() < 20) {
      rep.failure_notes.push_back("instance " + std::to_string(i) + " (seed " +
                                  hex_seed(instance_seed(i)) + "): " + msg);
    }
  }

  void note_example(const std::string& s) {
    if (rep.example.empty()) rep.example = s;
  }
};

SuiteReport run_ring_laws(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "ring_laws";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    RingElement x = random_ring(rng, 4, 9, 2);
    RingElement y = random_ring(rng, 4, 9, 2);
    RingElement z = random_ring(rng, 4, 9, 2);
    Rat t0 = random_rational_01(rng);
    bool ok = (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) &&
              x * (y + z) == x * y + x * z && x + y == y + x && x * y == y * x;
    ok = ok && (x * y).alpha() == x.alpha() * y && (x * y).alpha() == x * y.alpha() &&
         (x + y).alpha() == x.alpha() + y.alpha() && x.alpha(1).alpha(-1) == x &&
         x.alpha(-2).alpha(2) == x;
    ok = ok && (x + y).eval(t0) == x.eval(t0) + y.eval(t0) &&
         (x * y).eval(t0) == x.eval(t0) * y.eval(t0);
    if (!ok) {
      run.fail(i, "an algebraic identity failed on x = " + x.to_string() +
                      ", y = " + y.to_string() + ", z = " + z.to_string());
    } else {
      run.note_example("identities hold, e.g. eval at t0 = " + rat_to_string(t0) +
                       " respects + and *");
    }
  }
  return run.rep;
}

SuiteReport run_positivity_soundness(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "positivity_soundness";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    RingElement f = random_ring(rng, 6, 9, 2);
    ParamSet S = random_param_set(rng, 3);
    PositivityCertificate cert = is_positive_on(f, S);
    if (cert.verdict == Verdict::positive) {
      bool ok = true;
      for (const Rat& p : S.points()) {
        if (sign(f.eval(p)) <= 0) ok = false;
      }
      for (const Interval& iv : S.intervals()) {
        for (int k = 0; k <= 40 && ok; ++k) {
          Rat t = iv.lo + (iv.hi - iv.lo) * Rat(k, 40);
          if (sign(f.eval(t)) <= 0) ok = false;
        }
      }
      if (!ok) {
        run.fail(i, "POSITIVE verdict contradicted by grid sampling for f = " +
                        f.to_string() + " on " + S.to_string());
      } else {
        run.note_example("POSITIVE for f = " + f.to_string() + " on " + S.to_string());
      }
    } else {
      bool ok = false;
      if (cert.witness_point) {
        ok = S.member(*cert.witness_point) && sign(f.eval(*cert.witness_point)) <= 0;
      } else if (cert.witness_interval) {
        const auto& w = *cert.witness_interval;
        ok = (w.f_sign_lo != w.f_sign_hi) || (w.sf_sign_lo != w.sf_sign_hi);
      }
      if (!ok) {
        run.fail(i, "NOT_POSITIVE verdict without a checkable witness for f = " +
                        f.to_string() + " on " + S.to_string());
      } else {
        run.note_example("NOT_POSITIVE witnessed for f = " + f.to_string());
      }
    }
  }
  return run.rep;
}

SuiteReport run_cokernel(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "cokernel";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    GroupElement y = random_group(rng, 6, 3, 10);
    GroupElement x = y - y.gamma();
    if (!x.sum_alpha().is_zero()) {
      run.fail(i, "alpha sum of a coboundary is nonzero");
      continue;
    }
    GroupElement solved = solve_coboundary(x);
    if (solved != y) {
      run.fail(i, "coboundary equation solved to a different preimage");
    } else {
      run.note_example("recovered a preimage of support width " +
                       std::to_string(y.is_zero() ? 0 : y.max_index() - y.min_index() + 1));
    }
  }
  return run.rep;
}

SuiteReport run_s_map(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "s_map";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    GroupElement x = random_group(rng, 4, 3, 9);
    QuotientClass base = class_of(x);
    bool ok = true;
    GroupElement acc = x;
    for (int k = 0; k < 10; ++k) {
      GroupElement w = random_group(rng, 4, 3, 9);
      acc = acc + (w - w.gamma());
      if (class_of(acc) != base) ok = false;
    }
    RingElement r = random_ring(rng, 4, 9, 2);
    ok = ok && class_of(GroupElement::single(r)).value == r;
    ok = ok && class_of(section_of(base.value)) == base;
    if (!ok) {
      run.fail(i, "s-map value moved under coboundaries or the section");
    } else {
      run.note_example("class value stable under 10 coboundary shifts");
    }
  }
  return run.rep;
}

std::vector<KmsSpec> riesz_spec_pool() {
  std::vector<KmsSpec> pool;
  ParamSet half = ParamSet::normalize({Rat(1, 2)}, {});
  pool.push_back(validate_spec(half, half));
  pool.push_back(validate_spec(ParamSet::normalize({}, {{Rat(3, 5), Rat(7, 10)}}),
                               ParamSet::normalize({}, {{Rat(1, 4), Rat(3, 10)}})));
  pool.push_back(validate_spec(
      ParamSet::normalize({Rat(1, 2)}, {{Rat(3, 5), Rat(13, 20)}}), half));
  ParamSet band = ParamSet::normalize({}, {{Rat(1, 3), Rat(2, 5)}});
  pool.push_back(validate_spec(band, band));
  pool.push_back(validate_spec(ParamSet::normalize({Rat(1, 4), Rat(3, 4)}, {}),
                               ParamSet::normalize({Rat(1, 4)}, {})));
  return pool;
}

SuiteReport run_riesz(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "riesz_interpolation";
  run.rep.instances = n;
  std::vector<KmsSpec> pool = riesz_spec_pool();
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    const KmsSpec& spec = pool[static_cast<std::size_t>(i) % pool.size()];
    GroupElement w = random_group(rng, 2, 2, 3);
    GroupElement x1 = w - random_positive_group(rng, 2, 2, 3);
    GroupElement x2 = w - random_positive_group(rng, 2, 2, 3);
    GroupElement y1 = w + random_positive_group(rng, 2, 2, 3);
    GroupElement y2 = w + random_positive_group(rng, 2, 2, 3);
    try {
      RieszWitness rw = interpolate(x1, x2, y1, y2, spec);
      bool ok = in_G_plus(rw.z - x1, spec).member && in_G_plus(rw.z - x2, spec).member &&
                in_G_plus(y1 - rw.z, spec).member && in_G_plus(y2 - rw.z, spec).member;
      if (!ok) {
        run.fail(i, "returned interpolant fails independent cone checks");
      } else {
        run.note_example("interpolant found at degree " +
                         std::to_string(rw.stats_b.degree_used >= 0
                                            ? rw.stats_b.degree_used
                                            : rw.stats_a.degree_used));
      }
    } catch (const error& e) {
      run.fail(i, std::string("interpolation failed: ") + e.what());
    }
  }
  return run.rep;
}

SuiteReport run_cone_lemma(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "cone_lemma";
  run.rep.instances = n;
  struct Setup {
    KmsSpec spec;
    Rat target;  // a non-half point of F1 where plain positivity can be broken
  };
  std::vector<Setup> setups;
  setups.push_back({validate_spec(ParamSet::normalize({}, {{Rat(3, 5), Rat(7, 10)}}),
                                  ParamSet::normalize({}, {{Rat(1, 4), Rat(3, 10)}})),
                    Rat(27, 100)});
  setups.push_back(
      {validate_spec(ParamSet::normalize({Rat(1, 2)}, {{Rat(3, 5), Rat(13, 20)}}),
                     ParamSet::normalize({Rat(1, 4), Rat(1, 2)}, {})),
       Rat(1, 4)});
  setups.push_back({validate_spec(ParamSet::normalize({}, {{Rat(2, 5), Rat(3, 5)}}),
                                  ParamSet::normalize({}, {{Rat(2, 5), Rat(3, 5)}})),
                    Rat(9, 20)});
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    const Setup& su = setups[static_cast<std::size_t>(i) % setups.size()];
    GroupElement p = random_positive_group(rng, 3, 3, 5);
    GroupElement cob;
    Rat slope(0);
    for (int attempt = 0; attempt < 16; ++attempt) {
      GroupElement w = random_group(rng, 3, 2, 4);
      cob = w - w.gamma();
      slope = cob.sum_plain().eval(su.target);
      if (sign(slope) != 0) break;
    }
    if (sign(slope) == 0) {
      run.fail(i, "could not build a coboundary with nonzero plain value");
      continue;
    }
    Rat q = p.sum_plain().eval(su.target);
    // Choose k with q + k * slope < 0.
    Int k;
    if (sign(slope) > 0) {
      Rat bound = -q / slope;
      k = Int(bound.get_num() / bound.get_den()) - 1;
    } else {
      Rat bound = -q / slope;
      k = Int(bound.get_num() / bound.get_den()) + 1;
    }
    GroupElement x = p + cob * k;
    if (!in_G_plusplus(x, su.spec.F).member) {
      run.fail(i, "constructed element left the relaxed cone");
      continue;
    }
    if (in_G_plus(x, su.spec).member) {
      run.fail(i, "constructed element is already in the full cone");
      continue;
    }
    try {
      PositiveRep rep = positive_representative(x, su.spec);
      bool ok = rep.y.sum_alpha() == x.sum_alpha() && in_G_plus(rep.y, su.spec).member;
      if (!ok) {
        run.fail(i, "representative changed the class or failed the cone check");
      } else {
        run.note_example("repaired plain positivity with a degree " +
                         std::to_string(rep.stats.degree_used) + " correction");
      }
    } catch (const error& e) {
      run.fail(i, std::string("positive_representative failed: ") + e.what());
    }
  }
  return run.rep;
}

SuiteReport run_trace_scaling(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "trace_scaling";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    Rat t0 = random_rational_01(rng);
    GroupElement x = random_group(rng, 5, 3, 9);
    TraceFunctional plain{TraceKind::plain, t0};
    TraceFunctional twisted{TraceKind::twisted, t0};
    auto [pl, pr] = scaling_check(plain, x);
    auto [tl, tr] = scaling_check(twisted, x);
    bool ok = pl == pr && tl == tr;
    ok = ok && apply(plain, x.gamma()) == (t0 / (Rat(1) - t0)) * apply(plain, x);
    ok = ok && apply(twisted, x.gamma()) == apply(twisted, x);
    if (!ok) {
      run.fail(i, "trace scaling identity failed at t0 = " + rat_to_string(t0));
    } else {
      run.note_example("scaling factor verified at t0 = " + rat_to_string(t0));
    }
  }
  return run.rep;
}

SuiteReport run_spectrum_roundtrip(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "spectrum_roundtrip";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    BetaSetInput K = random_beta_set(rng);
    F1Construction f1c = f1_for_K(K, 30);
    KmsSpec spec = validate_spec(ParamSet::normalize({Rat(1, 2)}, {}), f1c.set);
    std::vector<BetaComponent> got = kms_spectrum(spec);

    struct Comp {
      double lo, hi;
    };
    std::vector<Comp> expected;
    bool zero_covered = false;
    for (double p : K.points) {
      expected.push_back({p, p});
      if (p == 0.0) zero_covered = true;
    }
    for (const auto& [lo, hi] : K.intervals) {
      expected.push_back({lo, hi});
      if (lo <= 0.0 && 0.0 <= hi) zero_covered = true;
    }
    if (!zero_covered) expected.push_back({0.0, 0.0});
    std::sort(expected.begin(), expected.end(),
              [](const Comp& a, const Comp& b) { return a.lo < b.lo; });

    bool ok = got.size() == expected.size();
    for (std::size_t k = 0; ok && k < got.size(); ++k) {
      ok = std::abs(got[k].lo - expected[k].lo) < 1e-9 &&
           std::abs(got[k].hi - expected[k].hi) < 1e-9;
    }
    if (!ok) {
      run.fail(i, "spectrum does not match K united with {0} (" +
                      std::to_string(got.size()) + " vs " +
                      std::to_string(expected.size()) + " components)");
    } else {
      run.note_example("round trip over " + std::to_string(expected.size()) +
                       " components within 1e-9");
    }
  }
  return run.rep;
}

SuiteReport run_hypothesis_gate(std::uint64_t master, int n) {
  SuiteRun run{{}, master};
  run.rep.name = "hypothesis_gate";
  run.rep.instances = n;
  for (int i = 0; i < n; ++i) {
    Rng rng(run.instance_seed(i));
    bool want_valid = i % 2 == 0;
    ParamSet F, F1;
    if (want_valid) {
      auto [a, b] = random_conforming_pair(rng);
      F = a;
      F1 = b;
    } else if (i % 10 == 1) {
      F = ParamSet();
      F1 = random_param_set(rng, 2);
    } else {
      auto [a, b] = random_violating_pair(rng);
      F = a;
      F1 = b;
    }
    bool oracle_valid = !F.empty() && F.member(Rat(1, 2)) == F1.member(Rat(1, 2));
    bool accepted;
    try {
      validate_spec(F, F1);
      accepted = true;
    } catch (const spec_error&) {
      accepted = false;
    }
    if (accepted != oracle_valid) {
      run.fail(i, std::string("gate ") + (accepted ? "accepted" : "rejected") +
                      " a pair the membership oracle calls " +
                      (oracle_valid ? "valid" : "invalid"));
    } else {
      run.note_example("gate agrees with the direct membership oracle");
    }
  }
  return run.rep;
}

}  // namespace

VerifyScale parse_scale(const std::string& s) {
  if (s == "small") return VerifyScale::small_scale;
  if (s == "medium") return VerifyScale::medium_scale;
  if (s == "large") return VerifyScale::large_scale;
  throw parse_error("unknown scale '" + s + "' (expected small, medium, or large)");
}

std::string scale_name(VerifyScale s) {
  switch (s) {
    case VerifyScale::small_scale: return "small";
    case VerifyScale::medium_scale: return "medium";
    case VerifyScale::large_scale: return "large";
  }
  return "?";
}

int VerifyReport::total_failures() const {
  int n = 0;
  for (const auto& s : suites) n += s.failures;
  return n;
}

VerifyReport run_verify(std::uint64_t seed, VerifyScale scale) {
  auto start = std::chrono::steady_clock::now();
  int mult = scale == VerifyScale::small_scale ? 1
             : scale == VerifyScale::medium_scale ? 3
                                                  : 10;
  VerifyReport r;
  r.seed = seed;
  r.scale = scale;
  r.suites.push_back(run_ring_laws(seed, 200 * mult));
  r.suites.push_back(run_positivity_soundness(seed, 60 * mult));
  r.suites.push_back(run_cokernel(seed, 200 * mult));
  r.suites.push_back(run_s_map(seed, 60 * mult));
  r.suites.push_back(run_riesz(seed, 10 * mult));
  r.suites.push_back(run_cone_lemma(seed, 10 * mult));
  r.suites.push_back(run_trace_scaling(seed, 200 * mult));
  r.suites.push_back(run_spectrum_roundtrip(seed, 15 * mult));
  r.suites.push_back(run_hypothesis_gate(seed, 200 * mult));
  std::sort(r.suites.begin(), r.suites.end(),
            [](const SuiteReport& a, const SuiteReport& b) { return a.name < b.name; });
  r.wall_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                    std::chrono::steady_clock::now() - start)
                                    .count());
  return r;
}

std::string report_to_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verification report\n";
  os << "seed: " << r.seed << "\n";
  os << "scale: " << scale_name(r.scale) << "\n";
  os << "suites: " << r.suites.size() << ", failures: " << r.total_failures() << "\n";
  os << "wall ms: " << r.wall_ms << "\n";
  for (const auto& s : r.suites) {
    os << "suite " << s.name << ": " << s.instances << " instances, " << s.failures
       << " failures\n";
    if (!s.example.empty()) os << "  example: " << s.example << "\n";
    for (const auto& f : s.failure_notes) os << "  failure: " << f << "\n";
  }
  return os.str();
}

nlohmann::json report_to_json(const VerifyReport& r) {
  nlohmann::json j;
  j["seed"] = r.seed;
  j["scale"] = scale_name(r.scale);
  j["wall_ms"] = r.wall_ms;
  j["total_failures"] = r.total_failures();
  j["suites"] = nlohmann::json::array();
  for (const auto& s : r.suites) {
    nlohmann::json js;
    js["name"] = s.name;
    js["instances"] = s.instances;
    js["failures"] = s.failures;
    js["failure_notes"] = s.failure_notes;
    js["example"] = s.example;
    j["suites"].push_back(js);
  }
  return j;
}

}  // namespace dglab
