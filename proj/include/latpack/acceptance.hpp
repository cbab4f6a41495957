#pragma once

// The end-to-end verification sweep behind `verify paper` and the
// acceptance test binary.

#include <string>
#include <vector>

#include <json.hpp>

namespace latpack::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool values_ok = false;
  double elapsed_ms = 0;
  double time_limit_ms = 0;  ///< 0 when unbounded
  nlohmann::json values = nlohmann::json::object();

  bool within_time() const { return time_limit_ms <= 0 || elapsed_ms <= time_limit_ms; }
  bool pass() const { return values_ok && within_time(); }
};

/// Runs criteria 1..14, or only those listed in `only`.
std::vector<CriterionResult> run(const std::vector<int>& only = {});

/// Deterministic part of the results (no timings).
nlohmann::json to_json(const std::vector<CriterionResult>& results);
/// Per-criterion timings.
nlohmann::json timings_json(const std::vector<CriterionResult>& results);

}  // namespace latpack::acceptance
