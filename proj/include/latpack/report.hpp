#pragma once

// JSON report envelope shared by every CLI command:
// {"command", "inputs", "outputs", "meta": {"version", "elapsed_ms", "tolerances"}}.

#include <string>

#include <json.hpp>

#include "latpack/bigint.hpp"
#include "latpack/lattice.hpp"

namespace latpack::report {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "0.1.0";

struct Meta {
  std::string version = kVersion;
  double elapsed_ms = 0;
  Json tolerances = Json::object();  ///< output field -> tolerance it was computed under
  Json extra = Json::object();       ///< other run metadata (per-step timings)
};

struct ReportEnvelope {
  std::string command;
  Json inputs = Json::object();
  Json outputs = Json::object();
  Meta meta;
};

Json to_json(const ReportEnvelope& r);
/// Throws std::invalid_argument on a malformed envelope.
ReportEnvelope from_json(const Json& j);

std::string emit(const ReportEnvelope& r, int indent = 2);
ReportEnvelope parse(const std::string& text);

/// Integer when it fits in int64, decimal string otherwise.
Json big_to_json(const BigInt& v);
BigInt big_from_json(const Json& j);
Json big_vector_to_json(const BigVector& v);
Json svector_to_json(const SVector& s);

}  // namespace latpack::report
