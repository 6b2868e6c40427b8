#pragma once

#include <cstdint>
#include <string>

#include "finsler/metric/metric.hpp"

namespace finsler::metric {

struct ValidationReport {
  int samples = 0;
  double homogeneity_max = 0.0;    // max |y.dL/dy - L| / (1 + |L|)
  double g_homogeneity_max = 0.0;  // max |y^k d g_ij / dy^k| / max(1, |g|)
  int positivity_violations = 0;   // L <= 0, g not positive definite, or evaluation failure
  double min_eigenvalue = 0.0;     // smallest eigenvalue of g over the samples
  bool pass = false;
  std::string first_problem;
};

inline constexpr double kHomogeneityTol = 1e-9;

/// Numerical check of the Finsler axioms at `count` seeded points drawn from
/// the metric's box without rejecting points where L fails.
ValidationReport validate_metric(const MetricSpec& spec, int count, std::uint64_t seed);

}  // namespace finsler::metric
