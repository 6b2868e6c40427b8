#include <gtest/gtest.h>

#include <cmath>

#include "finsler/curvature/curvature.hpp"
#include "finsler/geometry/sampling.hpp"
#include "finsler/metric/builtin.hpp"
#include "finsler/metric/parser.hpp"
#include "support/riemann_oracle.hpp"

using namespace finsler;
using namespace finsler::connections;
using namespace finsler::curvature;
using jets::Jet;

namespace {

geometry::FramePtr frame_for(const metric::MetricPtr& m, std::uint64_t seed) {
  return geometry::build_frame(m, geometry::Sampler(m, seed).next());
}

double max_value(const JetTensor& t) { return geometry::max_abs(geometry::values(t)); }

std::vector<Jet> basis_field(const geometry::Frame& f, int j) {
  std::vector<Jet> v(static_cast<std::size_t>(f.n), f.zero());
  v[static_cast<std::size_t>(j)] += 1.0;
  return v;
}

std::vector<Jet> column(const JetTensor& t, int k, int l) {
  std::vector<Jet> v;
  for (int m = 0; m < t.dim(); ++m) v.push_back(t(m, k, l));
  return v;
}

// [K(X, Y) e_j] from nested covariant derivatives along lifted coordinate fields.
// kind 0: X = delta_k, Y = delta_l; 1: X = delta_k, Y = d/dy^l; 2: both vertical.
std::vector<double> curvature_by_composition(const ConnectionData& c, int kind, int j, int k, int l) {
  const auto& f = *c.frame;
  const auto Z = basis_field(f, j);
  const auto none = std::vector<Jet>(static_cast<std::size_t>(f.n), f.zero());
  const auto ek = basis_field(f, k);
  const auto el = basis_field(f, l);
  const auto& Xh = kind == 2 ? none : ek;
  const auto& Xv = kind == 2 ? ek : none;
  const auto& Yh = kind == 0 ? el : none;
  const auto& Yv = kind == 0 ? none : el;
  std::vector<Jet> bracket_v;
  if (kind == 0) {
    bracket_v = column(torsions(c).Rhat, k, l);
  } else if (kind == 1) {
    for (int m = 0; m < f.n; ++m) bracket_v.push_back(f.dN(m, k, l));
  } else {
    bracket_v = none;
  }
  auto XYZ = covariant_along(covariant_along(Z, Yh, Yv, c), Xh, Xv, c);
  auto YXZ = covariant_along(covariant_along(Z, Xh, Xv, c), Yh, Yv, c);
  auto BZ = covariant_along(Z, none, bracket_v, c);
  std::vector<double> out;
  for (int i = 0; i < f.n; ++i) out.push_back(-XYZ[i].value() + YXZ[i].value() + BZ[i].value());
  return out;
}

}  // namespace

TEST(Curvature, HorizontalBracket) {
  auto m = metric::builtin_metric("randers", 3);
  auto f = frame_for(m, 6);
  auto t = torsions(cartan_connection(f));
  const int n = f->n;
  Jet probe = f->L2 * sin(f->x(0) + f->y(1)) + f->x(2) * f->y(0) * f->y(2);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      double lhs = f->delta(f->delta(probe, l), k).value() - f->delta(f->delta(probe, k), l).value();
      double rhs = 0;
      for (int m2 = 0; m2 < n; ++m2) rhs += t.Rhat(m2, k, l).value() * f->vdot(probe, m2).value();
      EXPECT_NEAR(lhs, rhs, 1e-11);
      // [d/dy^k, delta_l] = -dN^m_lk d/dy^m
      double lhs2 = f->vdot(f->delta(probe, l), k).value() - f->delta(f->vdot(probe, k), l).value();
      double rhs2 = 0;
      for (int m2 = 0; m2 < n; ++m2) rhs2 -= f->dN(m2, l, k).value() * f->vdot(probe, m2).value();
      EXPECT_NEAR(lhs2, rhs2, 1e-11);
    }
}

TEST(Curvature, ComponentsMatchNestedCovariantDerivatives) {
  for (auto m : {metric::builtin_metric("randers", 2), metric::builtin_metric("randers", 3),
                 metric::builtin_metric("minkowski_quartic", 2)}) {
    auto f = frame_for(m, 19);
    const int n = f->n;
    for (auto kind : kAllConnections) {
      auto c = make_connection(kind, f);
      auto cs = curvatures(c);
      const JetTensor* tensors[] = {&cs.R, &cs.P, &cs.S};
      for (int which = 0; which < 3; ++which)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
              auto ref = curvature_by_composition(c, which, j, k, l);
              for (int i = 0; i < n; ++i)
                EXPECT_NEAR((*tensors[which])(i, j, k, l).value(), ref[i], 1e-10)
                    << name(kind) << " " << which << " " << i << j << k << l;
            }
    }
  }
}

TEST(Curvature, TorsionPattern) {
  auto f = frame_for(metric::builtin_metric("randers", 3), 2);
  auto cartan = torsions(cartan_connection(f));
  auto berwald = torsions(berwald_connection(f));
  auto chern = torsions(chern_connection(f));
  auto hashiguchi = torsions(hashiguchi_connection(f));
  using geometry::is_exactly_zero;
  EXPECT_TRUE(is_exactly_zero(cartan.Q) && is_exactly_zero(cartan.Shat));
  EXPECT_TRUE(is_exactly_zero(berwald.Q) && is_exactly_zero(berwald.T) && is_exactly_zero(berwald.Phat) &&
              is_exactly_zero(berwald.Shat));
  EXPECT_TRUE(is_exactly_zero(chern.Q) && is_exactly_zero(chern.T) && is_exactly_zero(chern.Shat));
  EXPECT_TRUE(is_exactly_zero(hashiguchi.Q) && is_exactly_zero(hashiguchi.Phat) && is_exactly_zero(hashiguchi.Shat));
  EXPECT_GT(max_value(cartan.T), 1e-4);
  EXPECT_GT(max_value(cartan.Phat), 1e-4);
  EXPECT_GT(max_value(cartan.Rhat), 1e-4);
  EXPECT_TRUE(is_exactly_zero(curvatures(berwald_connection(f)).S));
  EXPECT_TRUE(is_exactly_zero(curvatures(chern_connection(f)).S));
}

TEST(Curvature, RiemannianMatchesLeviCivita) {
  auto m = metric::builtin_metric("riemannian_custom", 3);
  finsler::testing::RiemannOracle o(m);
  auto p = geometry::Sampler(m, 71).next();
  auto f = geometry::build_frame(m, p);
  for (auto k : kAllConnections) {
    auto cs = curvatures(make_connection(k, f));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b)
            EXPECT_NEAR(cs.R(i, j, a, b).value(), -o.riemann(p.x, i, j, a, b), 1e-6) << name(k);
    EXPECT_LT(max_value(cs.P), 1e-10);
    EXPECT_LT(max_value(cs.S), 1e-10);
  }
}

TEST(Curvature, UnitSphereSectionalProbe) {
  for (int dim : {2, 3}) {
    auto m = metric::builtin_metric("riemannian_sphere", dim);
    geometry::Sampler s(m, 90);
    for (const auto& p : s.take(3)) {
      auto f = geometry::build_frame(m, p);
      auto R = curvatures(cartan_connection(f)).R;
      auto Rl = lower_curvature(R, f->g);
      const double area = f->g(0, 0).value() * f->g(1, 1).value() - f->g(0, 1).value() * f->g(1, 0).value();
      // g(R(e_2, e_1) e_2, e_1) normalized by the area of e_1 ^ e_2
      EXPECT_NEAR(Rl(1, 0, 1, 0).value() / area, 1.0, 1e-10);
    }
  }
}

TEST(Curvature, HTensorContraction) {
  auto f = frame_for(metric::builtin_metric("randers", 3), 55);
  auto Ht = h_tensor(*f);
  auto R = curvatures(berwald_connection(f)).R;
  const int n = f->n;
  // Berwald R(eta, e_j) eta gives H^i_j
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double s = 0;
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) s += R(i, a, b, j).value() * f->point.y[a] * f->point.y[b];
      EXPECT_NEAR(s, Ht(i, j).value(), 1e-10);
    }
}
