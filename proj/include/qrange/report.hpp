#ifndef QRANGE_REPORT_HPP
#define QRANGE_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qrange {

// Machine-readable outcome of one property check. status is "pass" iff
// margin >= -tolerance; failing reports carry witnesses.
struct Report {
  std::string check_id;
  std::string status = "pass";  // pass | fail | skip
  double margin = 0.0;          // signed slack, positive = satisfied with room
  double tolerance = 0.0;
  std::uint64_t seed = 0;
  long samples = 0;
  std::string details;
  nlohmann::json witnesses;  // optional serialized vectors/matrices

  bool passed() const { return status == "pass"; }
  bool failed() const { return status == "fail"; }
};

inline Report make_report(std::string id, double margin, double tolerance,
                          std::uint64_t seed, long samples, std::string details,
                          nlohmann::json witnesses = nullptr) {
  Report r;
  r.check_id = std::move(id);
  r.margin = margin;
  r.tolerance = tolerance;
  r.seed = seed;
  r.samples = samples;
  r.details = std::move(details);
  r.status = (margin >= -tolerance) ? "pass" : "fail";
  if (r.failed()) r.witnesses = std::move(witnesses);
  return r;
}

inline nlohmann::json report_to_json(const Report& r) {
  nlohmann::json j{{"check_id", r.check_id}, {"status", r.status},
                   {"margin", r.margin},     {"tolerance", r.tolerance},
                   {"seed", r.seed},         {"samples", r.samples},
                   {"details", r.details}};
  if (!r.witnesses.is_null()) j["witnesses"] = r.witnesses;
  return j;
}

}  // namespace qrange

#endif
