#include "finsler/geometry/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace finsler::geometry::linalg {

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

std::vector<double> inverse(const std::vector<double>& a, int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> m = a;
  std::vector<double> inv(N * N, 0.0);
  for (std::size_t i = 0; i < N; ++i) inv[i * N + i] = 1.0;
  const double threshold = 1e-12 * max_abs(a);
  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m[r * N + col]) > std::abs(m[piv * N + col])) piv = r;
    if (!(std::abs(m[piv * N + col]) > threshold)) throw SingularMatrixError("matrix is singular to working precision");
    if (piv != col)
      for (std::size_t c = 0; c < N; ++c) {
        std::swap(m[piv * N + c], m[col * N + c]);
        std::swap(inv[piv * N + c], inv[col * N + c]);
      }
    const double d = m[col * N + col];
    for (std::size_t c = 0; c < N; ++c) {
      m[col * N + c] /= d;
      inv[col * N + c] /= d;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const double f = m[r * N + col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < N; ++c) {
        m[r * N + c] -= f * m[col * N + c];
        inv[r * N + c] -= f * inv[col * N + c];
      }
    }
  }
  return inv;
}

std::vector<double> solve(const std::vector<double>& a, const std::vector<double>& b, int n) {
  const auto inv = inverse(a, n);
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> x(N, 0.0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) x[i] += inv[i * N + j] * b[j];
  return x;
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
  const auto N = static_cast<std::size_t>(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) off += a[p * N + q] * a[p * N + q];
    if (off < 1e-30 * (1.0 + max_abs(a))) break;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a[p * N + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * N + q] - a[p * N + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a[k * N + p], akq = a[k * N + q];
          a[k * N + p] = c * akp - s * akq;
          a[k * N + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a[p * N + k], aqk = a[q * N + k];
          a[p * N + k] = c * apk - s * aqk;
          a[q * N + k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(N);
  for (std::size_t i = 0; i < N; ++i) ev[i] = a[i * N + i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace finsler::geometry::linalg
