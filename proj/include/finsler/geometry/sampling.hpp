#pragma once

#include <cstdint>
#include <vector>

#include "finsler/geometry/chart_point.hpp"
#include "finsler/metric/metric.hpp"

namespace finsler::geometry {

/// splitmix64; the sequence is fixed by the seed on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal via Box-Muller.
  double normal();

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Draws points of the metric's sampling domain: x uniform in the box, y with
/// uniform direction and log-uniform radius in [0.5, 2]. Points where L is
/// below the domain's floor or fails to evaluate are redrawn unless
/// `admissible_only` is false.
class Sampler {
 public:
  Sampler(metric::MetricPtr metric, std::uint64_t seed, bool admissible_only = true);
  ChartPoint next();
  std::vector<ChartPoint> take(int count);

 private:
  metric::MetricPtr metric_;
  SplitMix64 rng_;
  bool admissible_only_;
};

}  // namespace finsler::geometry
