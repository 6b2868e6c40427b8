#pragma once

// Finite-difference reference for mixed partial derivatives: nested central
// stencils on plain double evaluation, Richardson-extrapolated over the
// steps h, h/2, h/4.

#include <cmath>
#include <functional>
#include <vector>

namespace finsler::testing {

using ScalarFn = std::function<double(const std::vector<double>&)>;

namespace detail {

// Central stencils for the first three derivatives, all with even error
// expansions in h.
struct Stencil {
  std::vector<int> offsets;
  std::vector<double> weights;
  double denom_power;
  double denom_factor;
};

inline Stencil stencil(int e) {
  switch (e) {
    case 1: return {{1, -1}, {1.0, -1.0}, 1, 2.0};
    case 2: return {{1, 0, -1}, {1.0, -2.0, 1.0}, 2, 1.0};
    case 3: return {{2, 1, -1, -2}, {1.0, -2.0, 2.0, -1.0}, 3, 2.0};
    default: return {{2, 1, 0, -1, -2}, {1.0, -4.0, 6.0, -4.0, 1.0}, 4, 1.0};
  }
}

inline double nested(const ScalarFn& f, std::vector<double>& p, const std::vector<int>& alpha, std::size_t var,
                     double h) {
  while (var < alpha.size() && alpha[var] == 0) ++var;
  if (var == alpha.size()) return f(p);
  const Stencil s = stencil(alpha[var]);
  const double base = p[var];
  double acc = 0.0;
  for (std::size_t k = 0; k < s.offsets.size(); ++k) {
    p[var] = base + s.offsets[k] * h;
    acc += s.weights[k] * nested(f, p, alpha, var + 1, h);
  }
  p[var] = base;
  return acc / (s.denom_factor * std::pow(h, s.denom_power));
}

}  // namespace detail

/// d^alpha f at p. Exponents above 4 are not supported.
inline double fd_partial(const ScalarFn& f, std::vector<double> p, const std::vector<int>& alpha, double h = 1e-2) {
  int order = 0;
  for (int e : alpha) order += e;
  if (order == 0) return f(p);
  if (order == 1) h = 1e-3;
  const double d0 = detail::nested(f, p, alpha, 0, h);
  const double d1 = detail::nested(f, p, alpha, 0, h / 2);
  const double d2 = detail::nested(f, p, alpha, 0, h / 4);
  const double r0 = (4.0 * d1 - d0) / 3.0;
  const double r1 = (4.0 * d2 - d1) / 3.0;
  return (16.0 * r1 - r0) / 15.0;
}

/// |a - b| <= tol * max(1, |b|)
inline bool fd_close(double a, double b, double tol = 1e-6) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace finsler::testing
