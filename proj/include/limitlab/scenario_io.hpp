#pragma once

#include "limitlab/angluin.hpp"
#include "limitlab/harness.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace limitlab {

using json = nlohmann::json;

// Scenario files are JSON objects with the fields
//   scenario_id, collection, target_index, candidate, adversary, algorithm, horizon.
// `candidate` is either a flag-grammar string ("lang:3+{9}") or
// {"kind": ..., "params": {...}}. Unknown fields are rejected.
[[nodiscard]] GameScenario scenario_from_json(const json& j);
[[nodiscard]] json scenario_to_json(const GameScenario& s);
// Accepts a single scenario, an array, or {"scenarios": [...]}.
[[nodiscard]] std::vector<GameScenario> scenarios_from_json(const json& j);

// A bare name ("negex") or {"name": ..., "params": {...}}.
[[nodiscard]] AlgorithmSpec algorithm_from_json(const json& j);

[[nodiscard]] CandidateSet candidate_from_json(const json& j, const Collection& collection);
[[nodiscard]] json candidate_to_json(const CandidateSet& g);

[[nodiscard]] json step_to_json(const StepRecord& row);
// One JSON object per line, one line per step.
[[nodiscard]] std::string transcript_jsonl(const Transcript& transcript);
[[nodiscard]] json report_to_json(const GameScenario& s, const GameResult& result);

[[nodiscard]] json certificate_to_json(const AngluinCheckResult& result);
[[nodiscard]] AngluinCheckResult certificate_from_json(const json& j);

} // namespace limitlab
