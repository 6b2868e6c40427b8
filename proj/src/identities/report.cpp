#include "finsler/identities/report.hpp"

#include <cstdio>
#include <sstream>

namespace finsler::identities {

using nlohmann::ordered_json;

namespace {

// NaN and infinities are not valid JSON numbers.
ordered_json number(double x) {
  if (std::isfinite(x)) return x;
  return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

}  // namespace

ordered_json to_json(const IdentityReport& r, bool timing) {
  ordered_json j;
  j["id"] = r.id;
  j["point_index"] = r.point_index;
  j["point"] = {{"x", r.point.x}, {"y", r.point.y}};
  j["residual"] = number(r.residual);
  j["scale"] = number(r.scale);
  j["relative"] = number(r.relative);
  j["tolerance"] = r.tolerance;
  j["verdict"] = name(r.verdict);
  j["gating"] = r.gating;
  if (!r.message.empty()) j["message"] = r.message;
  if (timing) j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

ordered_json to_json(const IdentitySummary& s) {
  ordered_json j;
  j["id"] = s.id;
  j["verdict"] = name(s.verdict);
  j["gating"] = s.gating;
  j["worst_relative"] = number(s.worst_relative);
  j["worst_point"] = s.worst_point;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["skipped"] = s.skipped;
  j["errors"] = s.errors;
  return j;
}

ordered_json to_json(const IdentityDescriptor& d) {
  ordered_json j;
  j["id"] = d.id;
  j["group"] = d.group;
  j["statement"] = d.statement;
  ordered_json conns = ordered_json::array();
  for (auto c : d.connections) conns.push_back(connections::name(c));
  j["connections"] = conns;
  j["residual_shape"] = d.residual_shape;
  j["guard"] = name(d.guard);
  j["min_order"] = d.min_order;
  j["gating"] = d.gating;
  if (d.tolerance > 0.0) j["tolerance"] = d.tolerance;
  return j;
}

ordered_json records_json(const std::vector<IdentityReport>& records, bool timing) {
  ordered_json a = ordered_json::array();
  for (const auto& r : records) a.push_back(to_json(r, timing));
  return a;
}

std::string summary_csv(const std::vector<IdentitySummary>& summaries) {
  std::ostringstream os;
  os << "id,worst_relative,verdict\n";
  char buf[64];
  for (const auto& s : summaries) {
    std::snprintf(buf, sizeof buf, "%.6e", s.worst_relative);
    os << s.id << ',' << buf << ',' << name(s.verdict) << '\n';
  }
  return os.str();
}

}  // namespace finsler::identities
