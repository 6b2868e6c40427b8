#include "finsler/geometry/geometry.hpp"

namespace finsler::geometry {

using jets::Jet;

PiTensor metric_tensor(const metric::MetricPtr& spec, const ChartPoint& p) {
  return values(build_frame(spec, p, kFrameMinOrder)->g);
}
PiTensor cartan_tensor(const metric::MetricPtr& spec, const ChartPoint& p) {
  return values(build_frame(spec, p, kFrameMinOrder)->C);
}
PiTensor spray(const metric::MetricPtr& spec, const ChartPoint& p) {
  return values(build_frame(spec, p, kFrameMinOrder)->spray);
}
PiTensor barthel(const metric::MetricPtr& spec, const ChartPoint& p) {
  return values(build_frame(spec, p, kFrameMinOrder)->N);
}

std::vector<double> horizontal_derivative(const Frame& f, const Jet& field) {
  std::vector<double> out;
  for (int k = 0; k < f.n; ++k) out.push_back(f.delta(field, k).value());
  return out;
}

std::vector<double> spray_defect(const Frame& f) {
  const int n = f.n;
  const Jet E = 0.5 * f.L2;
  std::vector<double> out(static_cast<std::size_t>(2 * n), 0.0);
  const auto& y = f.point.y;
  for (int m = 0; m < n; ++m) {
    double dx = E.d(m).value();
    for (int j = 0; j < n; ++j) {
      dx += E.d2(n + m, j).value() * y[j];
      dx -= y[j] * E.d2(n + j, m).value();
      dx -= 2.0 * f.g(m, j).value() * f.spray(j).value();
    }
    double dy = E.d(n + m).value();
    for (int i = 0; i < n; ++i) dy -= f.g(i, m).value() * y[i];
    out[m] = dx;
    out[n + m] = dy;
  }
  return out;
}

}  // namespace finsler::geometry
