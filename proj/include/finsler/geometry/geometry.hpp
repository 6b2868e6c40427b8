#pragma once

#include <vector>

#include "finsler/geometry/frame.hpp"

namespace finsler::geometry {

/// g_ij = 1/2 d^2 L^2 / dy^i dy^j
PiTensor metric_tensor(const metric::MetricPtr& spec, const ChartPoint& p);
/// C_ijk = 1/4 d^3 L^2 / dy^i dy^j dy^k
PiTensor cartan_tensor(const metric::MetricPtr& spec, const ChartPoint& p);
/// G^i, solving i_G Omega = -dE
PiTensor spray(const metric::MetricPtr& spec, const ChartPoint& p);
/// N^i_j = dG^i / dy^j
PiTensor barthel(const metric::MetricPtr& spec, const ChartPoint& p);

/// delta_k f for k = 0..n-1 at the expansion point.
std::vector<double> horizontal_derivative(const Frame& f, const jets::Jet& field);

/// The 2n components of i_G Omega + dE in the coordinate coframe
/// (dx^1..dx^n, dy^1..dy^n), with Omega = dd_J E.
std::vector<double> spray_defect(const Frame& f);

}  // namespace finsler::geometry
