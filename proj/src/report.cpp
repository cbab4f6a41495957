#include "latpack/report.hpp"

#include <stdexcept>

namespace latpack::report {

Json to_json(const ReportEnvelope& r) {
  Json meta = {{"version", r.meta.version}, {"elapsed_ms", r.meta.elapsed_ms}, {"tolerances", r.meta.tolerances}};
  if (!r.meta.extra.empty()) meta["extra"] = r.meta.extra;
  return {{"command", r.command}, {"inputs", r.inputs}, {"outputs", r.outputs}, {"meta", meta}};
}

ReportEnvelope from_json(const Json& j) {
  try {
    ReportEnvelope r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    const Json& m = j.at("meta");
    r.meta.version = m.at("version").get<std::string>();
    r.meta.elapsed_ms = m.at("elapsed_ms").get<double>();
    r.meta.tolerances = m.at("tolerances");
    r.meta.extra = m.value("extra", Json::object());
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("report: malformed envelope: ") + e.what());
  }
}

std::string emit(const ReportEnvelope& r, int indent) { return to_json(r).dump(indent); }

ReportEnvelope parse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("report: invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Json big_to_json(const BigInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw std::invalid_argument("report: not an integer: " + j.get<std::string>());
    }
  }
  throw std::invalid_argument("report: expected an integer or a decimal string");
}

Json big_vector_to_json(const BigVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(big_to_json(x));
  return out;
}

Json svector_to_json(const SVector& s) { return big_vector_to_json(s.entries()); }

}  // namespace latpack::report
