#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dglab/numeric.hpp"

namespace dglab {

enum class VerifyScale { small_scale, medium_scale, large_scale };

VerifyScale parse_scale(const std::string& s);
std::string scale_name(VerifyScale s);

struct SuiteReport {
  std::string name;
  int instances = 0;
  int failures = 0;
  // One line per failed instance, carrying the instance seed for replay.
  std::vector<std::string> failure_notes;
  // Short certificate/value from one successful instance.
  std::string example;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  VerifyScale scale = VerifyScale::small_scale;
  std::vector<SuiteReport> suites;  // sorted by suite name
  long wall_ms = 0;
  int total_failures() const;
};

// Replays the constructive lemmas on randomized instances: ring laws,
// positivity soundness, the coboundary characterization, s-map invariance,
// Riesz interpolation, positive representatives, trace scaling, the
// spectrum round trip, and the spec hypothesis gate. Deterministic given
// the seed; scale multiplies instance counts (x1 / x3 / x10).
VerifyReport run_verify(std::uint64_t seed, VerifyScale scale);

// Everything except wall_ms is a pure function of (seed, scale).
std::string report_to_text(const VerifyReport& r);
nlohmann::json report_to_json(const VerifyReport& r);

}  // namespace dglab
