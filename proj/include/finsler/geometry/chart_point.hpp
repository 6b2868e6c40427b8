#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace finsler::geometry {

/// A point (x, y) of the slit tangent bundle in one chart.
struct ChartPoint {
  std::vector<double> x;
  std::vector<double> y;

  int dim() const { return static_cast<int>(x.size()); }
  /// Throws std::invalid_argument when shapes disagree or y = 0.
  void validate(int n) const;
  /// (x^1..x^n, y^1..y^n)
  std::vector<double> coordinates() const;
};

/// Parse "x=a,b,..;y=c,d,..".
ChartPoint parse_point(const std::string& text);

}  // namespace finsler::geometry
