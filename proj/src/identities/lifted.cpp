#include <algorithm>

#include "ops.hpp"

namespace finsler::identities::detail {

namespace {

std::vector<Jet> low(std::vector<Jet> v) {
  for (auto& j : v) j = j.truncated(std::min(1, j.order()));
  return v;
}

VectorField low(VectorField X) {
  X.c = low(std::move(X.c));
  return X;
}

}  // namespace

LiftBrackets::LiftBrackets(const geometry::Frame& f) : m_(2 * f.n) {
  std::vector<VectorField> lifts;
  for (int a = 0; a < m_; ++a) lifts.push_back(low(basis_lift(f, a)));
  for (int a = 0; a < m_; ++a)
    for (int b = 0; b < m_; ++b) {
      Adapted ad = adapted(f, bracket(lifts[a], lifts[b]));
      h_.push_back(values(ad.h));
      v_.push_back(values(ad.v));
    }
}

Split lift_split(int n, int a) {
  Split s{Vec(static_cast<std::size_t>(n), 0.0), Vec(static_cast<std::size_t>(n), 0.0)};
  if (a < n)
    s.h[a] = 1.0;
  else
    s.v[a - n] = 1.0;
  return s;
}

Vec bold_torsion(Ops& o, const Split& x, const Split& y) {
  return o.Q(x.h, y.h) + o.T(x.v, y.h) - o.T(y.v, x.h);
}

Vec bold_curvature(Ops& o, const Split& x, const Split& y, const Arg& w) {
  return o.R(x.h, y.h, w) + o.P(x.h, y.v, w) - o.P(y.h, x.v, w) + o.S(x.v, y.v, w);
}

Vec composed_curvature(PointContext& ctx, K c, const LiftBrackets& br, int a, int b, int z) {
  const auto& f = ctx.frame();
  const auto& conn = ctx.connection(c);
  const int n = f.n;
  std::vector<Jet> one(static_cast<std::size_t>(n), f.zero());
  // D_{lift s} e_z as a field, and the adapted components of lift s
  auto first = [&](int s) {
    std::vector<Jet> out;
    for (int i = 0; i < n; ++i) out.push_back(s < n ? conn.H(i, z, s) : conn.V(i, z, s - n));
    return low(out);
  };
  auto along = [&](int s, const std::vector<Jet>& Z) {
    std::vector<Jet> hx = one, vy = one;
    (s < n ? hx[s] : vy[s - n]) += 1.0;
    return values(connections::covariant_along(Z, hx, vy, conn));
  };
  Vec ab = along(a, first(b));
  Vec ba = along(b, first(a));
  Vec out = ba - ab;
  const auto& bh = br.h(a, b);
  const auto& bv = br.v(a, b);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      out[i] += bh[k] * conn.H(i, z, k).value();
      out[i] += bv[k] * conn.V(i, z, k).value();
    }
  return out;
}

PiTensor bracket_curvature(const LiftBrackets& br, int n) {
  PiTensor t(n, geometry::slots({'u', 'd', 'd'}), 0.0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int i = 0; i < n; ++i) t(i, a, b) = br.v(a, b)[i];
  return t;
}

}  // namespace finsler::identities::detail
