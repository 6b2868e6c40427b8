#pragma once

// Levi-Civita reference for quadratic L^2: metric by polarization, Christoffel
// symbols and the standard Riemann tensor by finite differences in x.

#include <vector>

#include "finsler/metric/metric.hpp"
#include "support/fd_oracle.hpp"

namespace finsler::testing {

struct RiemannOracle {
  metric::MetricPtr m;
  int n;

  explicit RiemannOracle(metric::MetricPtr spec) : m(std::move(spec)), n(m->dim()) {}

  double energy(const std::vector<double>& x, const std::vector<double>& y) const {
    std::vector<double> v(x);
    v.insert(v.end(), y.begin(), y.end());
    return m->eval_L2(v);
  }

  // g_ij(x), exact for L^2 quadratic in y
  double g(const std::vector<double>& x, int i, int j) const {
    std::vector<double> ei(n, 0.0), ej(n, 0.0), eij(n, 0.0);
    ei[i] = 1;
    ej[j] = 1;
    eij[i] += 1;
    eij[j] += 1;
    if (i == j) return energy(x, ei);
    return 0.5 * (energy(x, eij) - energy(x, ei) - energy(x, ej));
  }

  double dg(const std::vector<double>& x, int i, int j, int k) const {
    std::vector<int> alpha(n, 0);
    alpha[k] = 1;
    return fd_partial([&](const std::vector<double>& p) { return g(p, i, j); }, x, alpha);
  }

  std::vector<double> inverse(const std::vector<double>& x) const {
    std::vector<double> a(n * n), inv(n * n, 0.0);
    for (int i = 0; i < n; ++i) {
      inv[i * n + i] = 1;
      for (int j = 0; j < n; ++j) a[i * n + j] = g(x, i, j);
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      for (int r = c + 1; r < n; ++r)
        if (std::abs(a[r * n + c]) > std::abs(a[p * n + c])) p = r;
      for (int k = 0; k < n; ++k) {
        std::swap(a[c * n + k], a[p * n + k]);
        std::swap(inv[c * n + k], inv[p * n + k]);
      }
      const double d = a[c * n + c];
      for (int k = 0; k < n; ++k) {
        a[c * n + k] /= d;
        inv[c * n + k] /= d;
      }
      for (int r = 0; r < n; ++r) {
        if (r == c) continue;
        const double f = a[r * n + c];
        for (int k = 0; k < n; ++k) {
          a[r * n + k] -= f * a[c * n + k];
          inv[r * n + k] -= f * inv[c * n + k];
        }
      }
    }
    return inv;
  }

  // Gamma^i_jk
  double christoffel(const std::vector<double>& x, int i, int j, int k) const {
    const auto gi = inverse(x);
    double s = 0;
    for (int h = 0; h < n; ++h) s += 0.5 * gi[i * n + h] * (dg(x, h, j, k) + dg(x, h, k, j) - dg(x, j, k, h));
    return s;
  }

  // Riem(d_k, d_l) d_j = nabla_k nabla_l d_j - nabla_l nabla_k d_j, component i
  double riemann(const std::vector<double>& x, int i, int j, int k, int l) const {
    auto dgamma = [&](int a, int b, int c, int var) {
      std::vector<int> alpha(n, 0);
      alpha[var] = 1;
      return fd_partial([&](const std::vector<double>& p) { return christoffel(p, a, b, c); }, x, alpha);
    };
    double r = dgamma(i, l, j, k) - dgamma(i, k, j, l);
    for (int m = 0; m < n; ++m)
      r += christoffel(x, i, k, m) * christoffel(x, m, l, j) - christoffel(x, i, l, m) * christoffel(x, m, k, j);
    return r;
  }
};

}  // namespace finsler::testing
