#pragma once

#include <memory>
#include <vector>

#include "finsler/geometry/chart_point.hpp"
#include "finsler/geometry/tensor.hpp"
#include "finsler/metric/metric.hpp"

namespace finsler::geometry {

inline constexpr int kDefaultOrder = 6;
/// Smallest jet order at which the frame (down to dN) can be formed.
inline constexpr int kFrameMinOrder = 4;

/// Jets of the metric objects at one point of the slit tangent bundle.
///
/// With L^2 carried to order K the members have orders
///   g, g_inv: K-2   C: K-3   spray: K-2   N: K-3   dN: K-4.
/// Index conventions: N(i, j) = N^i_j = dG^i/dy^j, dN(i, j, k) = d^2 G^i/dy^j dy^k.
struct Frame {
  metric::MetricPtr metric;
  ChartPoint point;
  int n = 0;
  int order = 0;
  std::vector<jets::Jet> vars;  // x^1..x^n, y^1..y^n
  jets::Jet L;
  jets::Jet L2;
  JetTensor g;      // (d,d)  1/2 d^2 L^2 / dy dy
  JetTensor g_inv;  // (u,u)
  JetTensor C;      // (d,d,d) 1/4 d^3 L^2 / dy dy dy
  JetTensor spray;  // (u)
  JetTensor N;      // (u,d)
  JetTensor dN;     // (u,d,d)

  const jets::Jet& x(int i) const { return vars[static_cast<std::size_t>(i)]; }
  const jets::Jet& y(int i) const { return vars[static_cast<std::size_t>(n + i)]; }

  /// d f / dy^k
  jets::Jet vdot(const jets::Jet& f, int k) const { return f.d(n + k); }
  /// delta_k f = d f/dx^k - N^m_k d f/dy^m
  jets::Jet delta(const jets::Jet& f, int k) const;
  /// Zero jet at full order, for structurally vanishing components.
  jets::Jet zero() const;
  /// y as a rank-1 tensor of jets.
  JetTensor eta() const;
  PiTensor eta_value() const;
};

using FramePtr = std::shared_ptr<const Frame>;

/// Build all frame objects. Throws JetOrderError when order < kFrameMinOrder,
/// SingularMatrixError when g is singular and JetDomainError when L cannot be
/// evaluated at the point.
FramePtr build_frame(metric::MetricPtr metric, const ChartPoint& p, int order = kDefaultOrder);

/// Inverse of a symmetric jet matrix (row-major n x n), symmetrized exactly.
std::vector<jets::Jet> jet_inverse(const std::vector<jets::Jet>& a, int n);

}  // namespace finsler::geometry
