#pragma once

#include "json.hpp"

#include <string>
#include <vector>

#include "dglab/group.hpp"
#include "dglab/param_set.hpp"
#include "dglab/ring.hpp"
#include "dglab/sandwich.hpp"
#include "dglab/traces.hpp"

namespace dglab {

// Warnings (e.g. a non-reduced rational that was normalized) accumulate here;
// strict mode additionally rejects structurally non-canonical ring elements.
struct ParseOptions {
  bool strict = false;
  mutable std::vector<std::string> warnings;
};

nlohmann::json ring_to_json(const RingElement& x);
RingElement ring_from_json(const nlohmann::json& j, const ParseOptions& opt = {});

nlohmann::json group_to_json(const GroupElement& x);
GroupElement group_from_json(const nlohmann::json& j, const ParseOptions& opt = {});

nlohmann::json param_set_to_json(const ParamSet& s);
ParamSet param_set_from_json(const nlohmann::json& j, const ParseOptions& opt = {});

nlohmann::json kms_spec_to_json(const KmsSpec& s);
KmsSpec kms_spec_from_json(const nlohmann::json& j, const ParseOptions& opt = {});

nlohmann::json sandwich_problem_to_json(const SandwichProblem& p);
SandwichProblem sandwich_problem_from_json(const nlohmann::json& j,
                     const ParseOptions& opt = {});

nlohmann::json measure_to_json(const AtomicMeasure& m);
AtomicMeasure measure_from_json(const nlohmann::json& j, const ParseOptions& opt = {});

// Parses a whole document; nlohmann syntax errors are rethrown as parse_error
// with the byte offset preserved.
nlohmann::json parse_json_text(const std::string& text);

std::string dump_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);

}  // namespace dglab
