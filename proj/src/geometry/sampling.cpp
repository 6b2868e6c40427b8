#include "finsler/geometry/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace finsler::geometry {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Sampler::Sampler(metric::MetricPtr metric, std::uint64_t seed, bool admissible_only)
    : metric_(std::move(metric)), rng_(seed), admissible_only_(admissible_only) {}

ChartPoint Sampler::next() {
  const int n = metric_->dim();
  const auto& dom = metric_->domain();
  for (int attempt = 0; attempt < 10000; ++attempt) {
    ChartPoint p;
    p.x.resize(static_cast<std::size_t>(n));
    p.y.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p.x[i] = rng_.uniform(dom.x_box[i].first, dom.x_box[i].second);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) {
      p.y[i] = rng_.normal();
      norm2 += p.y[i] * p.y[i];
    }
    if (norm2 < 1e-24) continue;
    const double radius = std::exp(rng_.uniform(std::log(0.5), std::log(2.0)));
    const double s = radius / std::sqrt(norm2);
    for (double& v : p.y) v *= s;
    if (!admissible_only_) return p;
    const double L = metric_->eval_L(p.coordinates());
    if (!std::isfinite(L) || !(L > dom.min_L)) continue;
    return p;
  }
  throw std::runtime_error("sampler found no admissible point in the metric domain");
}

std::vector<ChartPoint> Sampler::take(int count) {
  std::vector<ChartPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(next());
  return out;
}

}  // namespace finsler::geometry
