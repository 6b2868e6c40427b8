#include "finsler/geometry/frame.hpp"

#include <cmath>

#include "finsler/geometry/linalg.hpp"

namespace finsler::geometry {

using jets::Jet;

Jet Frame::delta(const Jet& f, int k) const {
  Jet r = f.d(k);
  for (int m = 0; m < n; ++m) r.sub_product(N(m, k), f.d(n + m));
  return r;
}

Jet Frame::zero() const { return Jet(vars[0].space_ptr(), order); }

JetTensor Frame::eta() const {
  JetTensor e(n, slots({'u'}), zero());
  for (int i = 0; i < n; ++i) e(i) = y(i);
  return e;
}

PiTensor Frame::eta_value() const {
  PiTensor e(n, slots({'u'}), 0.0);
  for (int i = 0; i < n; ++i) e(i) = point.y[static_cast<std::size_t>(i)];
  return e;
}

std::vector<Jet> jet_inverse(const std::vector<Jet>& a, int n) {
  const auto N = static_cast<std::size_t>(n);
  std::vector<double> vals(N * N);
  for (std::size_t i = 0; i < N * N; ++i) vals[i] = a[i].value();
  const double threshold = 1e-12 * linalg::max_abs(vals);

  std::vector<Jet> m = a;
  std::vector<Jet> inv;
  inv.reserve(N * N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) inv.push_back(Jet::constant(a[0].space_ptr(), a[0].order(), i == j ? 1.0 : 0.0));

  for (std::size_t col = 0; col < N; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < N; ++r)
      if (std::abs(m[r * N + col].value()) > std::abs(m[piv * N + col].value())) piv = r;
    if (!(std::abs(m[piv * N + col].value()) > threshold))
      throw SingularMatrixError("metric tensor is singular at this point");
    if (piv != col)
      for (std::size_t c = 0; c < N; ++c) {
        std::swap(m[piv * N + c], m[col * N + c]);
        std::swap(inv[piv * N + c], inv[col * N + c]);
      }
    const Jet recip = 1.0 / m[col * N + col];
    for (std::size_t c = 0; c < N; ++c) {
      m[col * N + c] = m[col * N + c] * recip;
      inv[col * N + c] = inv[col * N + c] * recip;
    }
    for (std::size_t r = 0; r < N; ++r) {
      if (r == col) continue;
      const Jet f = m[r * N + col];
      for (std::size_t c = 0; c < N; ++c) {
        m[r * N + c].sub_product(f, m[col * N + c]);
        inv[r * N + c].sub_product(f, inv[col * N + c]);
      }
    }
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j) {
      Jet s = 0.5 * (inv[i * N + j] + inv[j * N + i]);
      inv[i * N + j] = s;
      inv[j * N + i] = s;
    }
  return inv;
}

FramePtr build_frame(metric::MetricPtr metric, const ChartPoint& p, int order) {
  const int n = metric->dim();
  p.validate(n);
  if (order < kFrameMinOrder) throw jets::JetOrderError(kFrameMinOrder, order);

  auto f = std::make_shared<Frame>();
  f->metric = metric;
  f->point = p;
  f->n = n;
  f->order = order;
  f->vars = jets::seed_variables(p.x, p.y, order);
  f->L = metric->eval_L(f->vars);
  f->L2 = metric->eval_L2(f->vars);
  if (!(f->L.value() > 0.0)) throw jets::JetDomainError("L is not positive at the point");
  const Jet& L2 = f->L2;
  const Jet zero = f->zero();

  f->g = JetTensor(n, slots({'d', 'd'}), zero);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Jet gij = 0.5 * L2.d2(n + i, n + j);
      f->g(i, j) = gij;
      f->g(j, i) = gij;
    }

  std::vector<Jet> gflat = f->g.data();
  const auto ginv = jet_inverse(gflat, n);
  f->g_inv = JetTensor(n, slots({'u', 'u'}), zero);
  f->g_inv.data() = ginv;

  f->C = JetTensor(n, slots({'d', 'd', 'd'}), zero);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        std::vector<int> alpha(static_cast<std::size_t>(2 * n), 0);
        ++alpha[n + i];
        ++alpha[n + j];
        ++alpha[n + k];
        Jet c = 0.25 * L2.d(alpha);
        const int perm[6][3] = {{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}};
        for (const auto& q : perm) f->C(q[0], q[1], q[2]) = c;
      }

  // G^i = 1/4 g^{ih} (y^j d^2 L^2/dy^h dx^j - d L^2/dx^h)
  std::vector<Jet> w;
  for (int h = 0; h < n; ++h) {
    Jet t = -L2.d(h);
    for (int j = 0; j < n; ++j) t.add_product(L2.d2(n + h, j), f->y(j));
    w.push_back(t);
  }
  f->spray = JetTensor(n, slots({'u'}), zero);
  for (int i = 0; i < n; ++i) {
    Jet s = f->g_inv(i, 0) * w[0];
    for (int h = 1; h < n; ++h) s.add_product(f->g_inv(i, h), w[h]);
    f->spray(i) = 0.25 * s;
  }

  f->N = JetTensor(n, slots({'u', 'd'}), zero);
  f->dN = JetTensor(n, slots({'u', 'd', 'd'}), zero);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) f->N(i, j) = f->spray(i).d(n + j);
    for (int j = 0; j < n; ++j)
      for (int k = j; k < n; ++k) {
        Jet d = f->spray(i).d2(n + j, n + k);
        f->dN(i, j, k) = d;
        f->dN(i, k, j) = d;
      }
  }
  return f;
}

}  // namespace finsler::geometry
