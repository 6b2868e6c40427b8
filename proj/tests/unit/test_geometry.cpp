#include <gtest/gtest.h>

#include <cmath>

#include "finsler/geometry/frame.hpp"
#include "finsler/geometry/geometry.hpp"
#include "finsler/geometry/linalg.hpp"
#include "finsler/geometry/sampling.hpp"
#include "finsler/metric/builtin.hpp"
#include "finsler/metric/parser.hpp"
#include "support/fd_oracle.hpp"
#include "support/riemann_oracle.hpp"

using namespace finsler;
using namespace finsler::geometry;
using finsler::testing::fd_close;
using finsler::testing::fd_partial;

namespace {

std::vector<metric::MetricPtr> sample_metrics() {
  return {metric::builtin_metric("randers", 2), metric::builtin_metric("randers", 3),
          metric::builtin_metric("minkowski_quartic", 2), metric::builtin_metric("riemannian_custom", 3),
          metric::parse_metric("sqrt((1 + x1^2)*y1^2 + exp(x2)*y2^2) + 0.2*sin(x1)*y2", 2)};
}

double L2_at(const metric::MetricPtr& m, const std::vector<double>& v) { return m->eval_L2(v); }

}  // namespace

TEST(Tensor, LowerRaisePermute) {
  PiTensor g(2, slots({'d', 'd'}), 0.0);
  g(0, 0) = 2;
  g(1, 1) = 3;
  g(0, 1) = g(1, 0) = 1;
  PiTensor v(2, slots({'u'}), 0.0);
  v(0) = 1;
  v(1) = -1;
  auto lv = lower(v, g, 0);
  EXPECT_EQ(lv.slot(0), Slot::Down);
  EXPECT_DOUBLE_EQ(lv(0), 1.0);
  EXPECT_DOUBLE_EQ(lv(1), -2.0);
  PiTensor a(2, slots({'u', 'd', 'd'}), 0.0);
  for (std::size_t f = 0; f < a.size(); ++f) a.data()[f] = static_cast<double>(f);
  auto p = permute(a, {1, 2, 0});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) EXPECT_EQ(p(j, k, i), a(i, j, k));
  EXPECT_EQ(slot_signature(p.slots()), "ddu");
  auto c = contract(a, 0, 1);
  EXPECT_DOUBLE_EQ(c(1), a(0, 0, 1) + a(1, 1, 1));
}

TEST(Linalg, InverseAndEigen) {
  std::vector<double> a{4, 1, 0, 1, 3, 1, 0, 1, 2};
  auto inv = linalg::inverse(a, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0;
      for (int k = 0; k < 3; ++k) s += a[i * 3 + k] * inv[k * 3 + j];
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-14);
    }
  auto ev = linalg::symmetric_eigenvalues(a, 3);
  EXPECT_NEAR(ev[0] + ev[1] + ev[2], 9.0, 1e-12);
  EXPECT_LT(ev[0], ev[1]);
  EXPECT_THROW(linalg::inverse({1, 2, 2, 4}, 2), SingularMatrixError);
}

TEST(Geometry, MetricAndCartanAgainstFiniteDifferences) {
  for (const auto& m : sample_metrics()) {
    Sampler s(m, 17);
    for (const auto& p : s.take(3)) {
      const int n = m->dim();
      auto g = metric_tensor(m, p);
      auto C = cartan_tensor(m, p);
      auto fn = [&](const std::vector<double>& v) { return L2_at(m, v); };
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::vector<int> a(2 * n, 0);
          a[n + i] += 1;
          a[n + j] += 1;
          EXPECT_TRUE(fd_close(g(i, j), 0.5 * fd_partial(fn, p.coordinates(), a))) << i << j;
          for (int k = 0; k < n; ++k) {
            auto b = a;
            b[n + k] += 1;
            EXPECT_TRUE(fd_close(C(i, j, k), 0.25 * fd_partial(fn, p.coordinates(), b), 1e-5)) << i << j << k;
          }
        }
    }
  }
}

TEST(Geometry, SpraySolvesDefectEquation) {
  for (const auto& m : sample_metrics()) {
    Sampler s(m, 5);
    for (const auto& p : s.take(4)) {
      auto f = build_frame(m, p);
      for (double v : spray_defect(*f)) EXPECT_NEAR(v, 0.0, 1e-11);
    }
  }
}

TEST(Geometry, HomogeneityRelations) {
  for (const auto& m : sample_metrics()) {
    Sampler s(m, 9);
    for (const auto& p : s.take(3)) {
      auto f = build_frame(m, p);
      const int n = f->n;
      double gyy = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gyy += f->g(i, j).value() * p.y[i] * p.y[j];
      EXPECT_NEAR(gyy, f->L2.value(), 1e-12 * f->L2.value());
      for (int i = 0; i < n; ++i) {
        double ny = 0;
        for (int j = 0; j < n; ++j) ny += f->N(i, j).value() * p.y[j];
        EXPECT_NEAR(ny, 2.0 * f->spray(i).value(), 1e-11);
        for (int j = 0; j < n; ++j) {
          double cy = 0, dny = 0;
          for (int k = 0; k < n; ++k) {
            cy += f->C(i, j, k).value() * p.y[k];
            dny += f->dN(i, j, k).value() * p.y[k];
          }
          EXPECT_NEAR(cy, 0.0, 1e-12);
          EXPECT_NEAR(dny, f->N(i, j).value(), 1e-11);
        }
      }
    }
  }
}

TEST(Geometry, FundamentalFunctionIsHorizontallyConstant) {
  for (const auto& m : sample_metrics()) {
    Sampler s(m, 21);
    for (const auto& p : s.take(3)) {
      auto f = build_frame(m, p);
      for (double v : horizontal_derivative(*f, f->L)) EXPECT_NEAR(v, 0.0, 1e-11);
      for (double v : horizontal_derivative(*f, f->L2)) EXPECT_NEAR(v, 0.0, 1e-11);
    }
  }
}

TEST(Geometry, ExactSymmetries) {
  auto m = metric::builtin_metric("randers", 3);
  auto f = build_frame(m, Sampler(m, 3).next());
  const int n = f->n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      EXPECT_EQ(f->g(i, j).coeffs()[0], f->g(j, i).coeffs()[0]);
      for (std::size_t c = 0; c < f->g(i, j).size(); ++c) ASSERT_EQ(f->g(i, j)[c], f->g(j, i)[c]);
      for (int k = 0; k < n; ++k) {
        for (std::size_t c = 0; c < f->C(i, j, k).size(); ++c) {
          ASSERT_EQ(f->C(i, j, k)[c], f->C(j, i, k)[c]);
          ASSERT_EQ(f->C(i, j, k)[c], f->C(k, j, i)[c]);
        }
        for (std::size_t c = 0; c < f->dN(i, j, k).size(); ++c) ASSERT_EQ(f->dN(i, j, k)[c], f->dN(i, k, j)[c]);
      }
    }
}

TEST(Geometry, FrameOrders) {
  auto m = metric::builtin_metric("randers", 2);
  auto p = Sampler(m, 1).next();
  auto f = build_frame(m, p, 6);
  EXPECT_EQ(min_order(f->g), 4);
  EXPECT_EQ(min_order(f->C), 3);
  EXPECT_EQ(min_order(f->N), 3);
  EXPECT_EQ(min_order(f->dN), 2);
  EXPECT_THROW(build_frame(m, p, 3), jets::JetOrderError);
  ChartPoint zero{{0.1, 0.2}, {0.0, 0.0}};
  EXPECT_ANY_THROW(build_frame(m, zero));
}

TEST(Geometry, RiemannianSprayMatchesChristoffel) {
  for (auto m : {metric::builtin_metric("riemannian_custom", 2), metric::builtin_metric("riemannian_custom", 3),
                 metric::builtin_metric("riemannian_sphere", 3)}) {
    finsler::testing::RiemannOracle o(m);
    Sampler s(m, 33);
    for (const auto& p : s.take(2)) {
      auto f = build_frame(m, p);
      const int n = f->n;
      for (int i = 0; i < n; ++i) {
        double G = 0;
        for (int j = 0; j < n; ++j) {
          double Nij = 0;
          for (int k = 0; k < n; ++k) {
            const double gam = o.christoffel(p.x, i, j, k);
            G += 0.5 * gam * p.y[j] * p.y[k];
            Nij += gam * p.y[k];
            EXPECT_NEAR(f->dN(i, j, k).value(), gam, 1e-9);
          }
          EXPECT_NEAR(f->N(i, j).value(), Nij, 1e-9);
        }
        EXPECT_NEAR(f->spray(i).value(), G, 1e-9);
      }
    }
  }
}

TEST(Geometry, EuclideanIsFlat) {
  auto m = metric::builtin_metric("euclidean", 3);
  auto f = build_frame(m, Sampler(m, 2).next());
  EXPECT_TRUE(is_exactly_zero(f->spray));
  EXPECT_TRUE(is_exactly_zero(f->N));
  EXPECT_TRUE(is_exactly_zero(f->C));
}
