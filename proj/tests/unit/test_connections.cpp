#include <gtest/gtest.h>

#include <cmath>

#include "finsler/connections/connection.hpp"
#include "finsler/geometry/sampling.hpp"
#include "finsler/metric/builtin.hpp"
#include "finsler/metric/parser.hpp"
#include "support/riemann_oracle.hpp"

using namespace finsler;
using namespace finsler::connections;
using geometry::slots;

namespace {

geometry::FramePtr frame_for(const std::string& family, int dim, std::uint64_t seed) {
  auto m = metric::builtin_metric(family, dim);
  return geometry::build_frame(m, geometry::Sampler(m, seed).next());
}

double max_value(const JetTensor& t) { return geometry::max_abs(geometry::values(t)); }

bool jets_identical(const JetTensor& a, const JetTensor& b) {
  for (std::size_t f = 0; f < a.size(); ++f) {
    const auto& x = a.data()[f];
    const auto& y = b.data()[f];
    if (x.size() != y.size()) return false;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (x[c] != y[c]) return false;
  }
  return true;
}

}  // namespace

TEST(Connections, NamesRoundTrip) {
  for (auto k : kAllConnections) EXPECT_EQ(parse_connection(name(k)), k);
  EXPECT_FALSE(parse_connection("levi-civita").has_value());
}

TEST(Connections, SharedCoefficients) {
  auto f = frame_for("randers", 3, 4);
  auto cartan = cartan_connection(f);
  auto chern = chern_connection(f);
  auto berwald = berwald_connection(f);
  auto hashiguchi = hashiguchi_connection(f);
  EXPECT_TRUE(jets_identical(cartan.H, chern.H));
  EXPECT_TRUE(jets_identical(cartan.V, hashiguchi.V));
  EXPECT_TRUE(jets_identical(berwald.H, f->dN));
  EXPECT_TRUE(jets_identical(hashiguchi.H, f->dN));
  EXPECT_TRUE(berwald.v_vanishes && chern.v_vanishes);
  EXPECT_FALSE(cartan.v_vanishes || hashiguchi.v_vanishes);
  EXPECT_TRUE(geometry::is_exactly_zero(berwald.V));
  EXPECT_GT(max_value(cartan.V), 1e-3);
}

TEST(Connections, Metricity) {
  for (int dim : {2, 3}) {
    auto f = frame_for("randers", dim, 8);
    auto tol = 1e-11;
    EXPECT_LT(max_value(h_cov_deriv(f->g, cartan_connection(f))), tol);
    EXPECT_LT(max_value(v_cov_deriv(f->g, cartan_connection(f))), tol);
    EXPECT_LT(max_value(h_cov_deriv(f->g, chern_connection(f))), tol);
    EXPECT_LT(max_value(v_cov_deriv(f->g, hashiguchi_connection(f))), tol);
    // g_{ij|k} = -2 L_ijk for Berwald, g_{ij||k} = 2 C_ijk when V = 0
    EXPECT_GT(max_value(h_cov_deriv(f->g, berwald_connection(f))), 1e-4);
    auto vg = v_cov_deriv(f->g, chern_connection(f));
    for (std::size_t a = 0; a < vg.size(); ++a) EXPECT_NEAR(vg.data()[a].value(), 2.0 * f->C.data()[a].value(), 1e-12);
  }
}

TEST(Connections, DeflectionAndCanonicalSection) {
  auto f = frame_for("randers", 3, 12);
  const int n = f->n;
  for (auto k : kAllConnections) {
    auto c = make_connection(k, f);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) {
        double s = 0;
        for (int j = 0; j < n; ++j) s += c.H(i, j, l).value() * f->point.y[j];
        EXPECT_NEAR(s, f->N(i, l).value(), 1e-11) << name(k);
      }
    EXPECT_LT(max_value(h_cov_deriv(f->eta(), c)), 1e-11) << name(k);
    auto ve = v_cov_deriv(f->eta(), c);
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l) EXPECT_NEAR(ve(i, l).value(), i == l ? 1.0 : 0.0, 1e-11) << name(k);
  }
}

TEST(Connections, ProductRule) {
  auto f = frame_for("randers", 2, 30);
  auto c = hashiguchi_connection(f);
  auto A = geometry::outer(f->eta(), f->g);
  for (int vertical = 0; vertical < 2; ++vertical) {
    auto D = [&](const JetTensor& t) { return vertical ? v_cov_deriv(t, c) : h_cov_deriv(t, c); };
    auto lhs = geometry::values(D(A));
    auto t1 = geometry::values(geometry::permute(geometry::outer(D(f->eta()), f->g), {0, 2, 3, 1}));
    auto t2 = geometry::values(geometry::outer(f->eta(), D(f->g)));
    EXPECT_LT(geometry::max_abs(lhs - (t1 + t2)), 1e-12);
  }
}

TEST(Connections, ExactSymmetryOfCoefficients) {
  auto f = frame_for("minkowski_quartic", 3, 2);
  for (auto k : kAllConnections) {
    auto c = make_connection(k, f);
    const int n = f->n;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
          for (std::size_t q = 0; q < c.H(i, j, l).size(); ++q) {
            ASSERT_EQ(c.H(i, j, l)[q], c.H(i, l, j)[q]);
            ASSERT_EQ(c.V(i, j, l)[q], c.V(i, l, j)[q]);
          }
  }
}

TEST(Connections, RiemannianReducesToLeviCivita) {
  auto m = metric::builtin_metric("riemannian_custom", 3);
  finsler::testing::RiemannOracle o(m);
  auto p = geometry::Sampler(m, 44).next();
  auto f = geometry::build_frame(m, p);
  for (auto k : kAllConnections) {
    auto c = make_connection(k, f);
    EXPECT_LT(max_value(c.V), 1e-13);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int l = 0; l < 3; ++l) EXPECT_NEAR(c.H(i, j, l).value(), o.christoffel(p.x, i, j, l), 1e-9);
  }
}
