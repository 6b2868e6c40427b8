#pragma once

#include <string>
#include <vector>

#include "finsler/metric/metric.hpp"

namespace finsler::metric {

struct FamilyInfo {
  std::string name;
  std::string summary;
  std::string params;
};

const std::vector<FamilyInfo>& builtin_families();

/// Build a builtin family. `params_json` is a JSON object (may be empty);
/// table entries are numbers or expressions in x1..xn.
///
/// euclidean           L = sqrt(sum y_i^2)
/// riemannian_sphere   round unit sphere in hyperspherical coordinates
/// riemannian_custom   L = sqrt(a_ij(x) y^i y^j), params {"a": n x n table}
/// randers             L = sqrt(a_ij y^i y^j) + b_i y^i, params {"a", "b"}
/// minkowski_quartic   L = (sum y_i^4)^(1/4)
MetricPtr builtin_metric(const std::string& family, int dim, const std::string& params_json = "{}");

/// Metric from a JSON document {dim, kind: "expression"|"family", body, params}.
MetricPtr metric_from_json(const std::string& document);

}  // namespace finsler::metric
