#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "finsler/jets/jet.hpp"
#include "finsler/jets/kernels.hpp"
#include "support/fd_oracle.hpp"

using namespace finsler::jets;
using finsler::testing::fd_close;
using finsler::testing::fd_partial;

namespace {

// A composite test function written once for both doubles and jets.
template <class T>
T composite(const std::vector<T>& v) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::sin;
  using std::sqrt;
  const T& a = v[0];
  const T& b = v[1];
  const T& c = v[2];
  const T& d = v[3];
  return exp(0.3 * a) * sin(b - c) + log(2.0 + a * a + d * d) / (1.5 + cos(c * d)) + sqrt(3.0 + b * d) -
         0.7 / (1.0 + c * c);
}

// Squared Randers function for a(x) = id + 0.1 x x^T, b = (0.3 cos x2, 0.2 sin x1).
template <class T>
T randers_l2(const std::vector<T>& v) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const T &x1 = v[0], &x2 = v[1], &y1 = v[2], &y2 = v[3];
  const T xy = x1 * y1 + x2 * y2;
  const T alpha = sqrt(y1 * y1 + y2 * y2 + 0.1 * xy * xy);
  const T beta = 0.3 * cos(x2) * y1 + 0.2 * sin(x1) * y2;
  const T L = alpha + beta;
  return L * L;
}

std::vector<Jet> seeds4(const std::vector<double>& p, int K) {
  return seed_variables(std::vector<double>{p[0], p[1]}, std::vector<double>{p[2], p[3]}, K);
}

std::vector<std::vector<int>> multi_indices(int nvars, int max_deg) {
  auto sp = JetSpace::get(nvars, max_deg);
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < sp->size(max_deg); ++i) out.push_back(sp->exponents(i));
  return out;
}

Jet random_jet(const SpacePtr& sp, int K, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Jet j(sp, K);
  for (auto& c : j.coeffs()) c = u(rng);
  return j;
}

}  // namespace

TEST(JetSpace, SizesMatchBinomial) {
  for (int n = 1; n <= 8; ++n)
    for (int K = 0; K <= 6; ++K) EXPECT_EQ(JetSpace::get(n, K)->size(K), binomial(n + K, K));
  EXPECT_EQ(JetSpace::get(4, 6)->size(6), 210u);
}

TEST(JetSpace, GradedLexOrder) {
  auto sp = JetSpace::get(2, 2);
  std::vector<std::vector<int>> expect{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  for (std::size_t i = 0; i < expect.size(); ++i) EXPECT_EQ(sp->exponents(i), expect[i]);
}

TEST(JetSpace, PairListsArePalindromes) {
  auto sp = JetSpace::get(4, 5);
  auto off = sp->pair_offsets();
  auto l = sp->pair_lhs();
  auto r = sp->pair_rhs();
  for (std::size_t t = 0; t < sp->size(5); ++t) {
    const auto b = off[t], e = off[t + 1];
    ASSERT_EQ(l[b], 0u);
    ASSERT_EQ(r[b], t);
    for (auto k = b; k < e; ++k) ASSERT_EQ(l[k], r[e - 1 - (k - b)]);
  }
}

TEST(JetSpace, RejectsBadShape) {
  EXPECT_THROW(JetSpace::get(0, 2), std::invalid_argument);
  EXPECT_THROW(seed_variables(std::vector<double>{1.0}, std::vector<double>{1.0}, -1), std::invalid_argument);
}

TEST(SeedVariables, SingleDimensionOrderTwo) {
  auto v = seed_variables(std::vector<double>{2.0}, std::vector<double>{3.0}, 2);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].value(), 2.0);
  EXPECT_EQ(v[0].coeff(std::vector<int>{1, 0}), 1.0);
  EXPECT_EQ(v[0].coeff(std::vector<int>{0, 1}), 0.0);
  EXPECT_EQ(v[1].value(), 3.0);
  EXPECT_EQ(v[1].coeff(std::vector<int>{0, 1}), 1.0);
  for (std::size_t i = 3; i < v[0].size(); ++i) EXPECT_EQ(v[0][i], 0.0);
}

TEST(SeedVariables, OrderZeroAndDenseCount) {
  auto v0 = seed_variables(std::vector<double>{0.1, 0.2}, std::vector<double>{1.0, 2.0}, 0);
  for (const auto& j : v0) EXPECT_EQ(j.size(), 1u);
  auto v6 = seed_variables(std::vector<double>{0.1, 0.2}, std::vector<double>{1.0, 2.0}, 6);
  for (const auto& j : v6) EXPECT_EQ(j.size(), 210u);
}

TEST(Elementary, SqrtOfFourPlusU) {
  auto sp = JetSpace::get(1, 2);
  Jet u = Jet::variable(sp, 2, 0, 0.0);
  Jet s = sqrt(4.0 + u);
  EXPECT_DOUBLE_EQ(s[0], 2.0);
  EXPECT_DOUBLE_EQ(s[1], 0.25);
  EXPECT_DOUBLE_EQ(s[2], -1.0 / 64.0);
}

TEST(Elementary, MultiplicativeIdentityAndSelfQuotient) {
  auto v = seeds4({0.2, -0.4, 1.1, 0.7}, 5);
  Jet f = composite(v);
  Jet one = Jet::constant(f.space_ptr(), 5, 1.0);
  Jet g = f * one;
  for (std::size_t i = 0; i < f.size(); ++i) EXPECT_EQ(g[i], f[i]);
  Jet q = f / f;
  EXPECT_EQ(q[0], 1.0);
  for (std::size_t i = 1; i < q.size(); ++i) EXPECT_EQ(q[i], 0.0);
}

TEST(Elementary, DomainErrors) {
  auto sp = JetSpace::get(2, 3);
  Jet u = Jet::variable(sp, 3, 0, 0.0);
  EXPECT_THROW(1.0 / u, JetDomainError);
  EXPECT_THROW(sqrt(u - 1.0), JetDomainError);
  EXPECT_THROW(sqrt(u), JetDomainError);
  EXPECT_THROW(log(u), JetDomainError);
  EXPECT_THROW(pow(u - 2.0, 0.5), JetDomainError);
}

TEST(Elementary, IntegerAndRealPowers) {
  auto v = seeds4({0.3, 0.1, 0.9, -0.6}, 4);
  Jet f = 1.5 + v[0] * v[3] + v[2];
  Jet p5 = pow_int(f, 5);
  Jet m = f * f * f * f * f;
  Jet pm2 = pow_int(f, -2);
  Jet inv2 = 1.0 / (f * f);
  Jet half = pow(f, 0.5);
  Jet s = sqrt(f);
  for (std::size_t i = 0; i < f.size(); ++i) {
    EXPECT_NEAR(p5[i], m[i], 1e-12 * std::max(1.0, std::abs(m[i])));
    EXPECT_NEAR(pm2[i], inv2[i], 1e-12 * std::max(1.0, std::abs(inv2[i])));
    EXPECT_NEAR(half[i], s[i], 1e-13 * std::max(1.0, std::abs(s[i])));
  }
  Jet z = pow_int(f, 0);
  EXPECT_EQ(z[0], 1.0);
}

TEST(ExtractPartial, Basics) {
  auto sp = JetSpace::get(1, 3);
  Jet u = Jet::variable(sp, 3, 0, 0.7);
  EXPECT_DOUBLE_EQ((u * u).partial({2}), 2.0);
  Jet c = Jet::constant(sp, 3, 5.0);
  EXPECT_EQ(c.partial({1}), 0.0);
  EXPECT_EQ(c.partial({3}), 0.0);
  EXPECT_THROW(c.partial({4}), JetOrderError);
}

TEST(ExtractPartial, CompositeMatchesFiniteDifferences) {
  const std::vector<double> p{0.2, -0.3, 0.5, 0.8};
  auto jets = seeds4(p, 3);
  Jet f = composite(jets);
  auto fn = [](const std::vector<double>& q) { return composite(q); };
  for (const auto& alpha : multi_indices(4, 3)) {
    const double ref = fd_partial(fn, p, alpha);
    EXPECT_TRUE(fd_close(f.partial(alpha), ref)) << "alpha degree " << alpha[0] + alpha[1] + alpha[2] + alpha[3]
                                                  << " jet " << f.partial(alpha) << " fd " << ref;
  }
}

TEST(ExtractPartial, RandersSquareMatchesFiniteDifferences) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto fn = [](const std::vector<double>& q) { return randers_l2(q); };
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> p{u(rng), u(rng), 0.5 + u(rng) * 0.4, 0.7 + u(rng) * 0.4};
    Jet f = randers_l2(seeds4(p, 3));
    for (const auto& alpha : multi_indices(4, 3)) {
      const double ref = fd_partial(fn, p, alpha);
      EXPECT_TRUE(fd_close(f.partial(alpha), ref)) << f.partial(alpha) << " vs " << ref;
    }
  }
}

TEST(Truncation, LowerOrderPrefixIsIdentical) {
  const std::vector<double> p{0.4, 0.1, -0.2, 0.9};
  Jet hi = composite(seeds4(p, 6));
  for (int K = 0; K < 6; ++K) {
    Jet lo = composite(seeds4(p, K));
    ASSERT_EQ(lo.size(), JetSpace::get(4, 6)->size(K));
    for (std::size_t i = 0; i < lo.size(); ++i) EXPECT_EQ(lo[i], hi[i]) << "order " << K << " index " << i;
    Jet t = hi.truncated(K);
    for (std::size_t i = 0; i < lo.size(); ++i) EXPECT_EQ(t[i], lo[i]);
  }
}

TEST(Algebra, AddAndMulCommuteExactly) {
  std::mt19937_64 rng(11);
  auto sp = JetSpace::get(6, 6);
  for (int trial = 0; trial < 10; ++trial) {
    Jet a = random_jet(sp, 6, rng);
    Jet b = random_jet(sp, 6, rng);
    Jet ab = a * b, ba = b * a;
    Jet s1 = a + b, s2 = b + a;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(ab[i], ba[i]);
      ASSERT_EQ(s1[i], s2[i]);
    }
  }
}

TEST(Algebra, MulDistributesOverAdd) {
  // Exact up to rounding of the two summation paths.
  std::mt19937_64 rng(12);
  auto sp = JetSpace::get(4, 6);
  for (int trial = 0; trial < 10; ++trial) {
    Jet a = random_jet(sp, 6, rng), b = random_jet(sp, 6, rng), c = random_jet(sp, 6, rng);
    Jet lhs = a * (b + c);
    Jet rhs = a * b + a * c;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(lhs[i], rhs[i], 1e-13 * (1.0 + std::abs(rhs[i])));
  }
}

TEST(Derivative, FusedMixedPartialsAreSymmetric) {
  auto jets = seeds4({0.3, 0.2, 1.0, -0.5}, 6);
  Jet f = composite(jets);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Jet a = f.d2(i, j), b = f.d2(j, i);
      Jet nested = f.d(i).d(j);
      ASSERT_EQ(a.order(), 4);
      for (std::size_t k = 0; k < a.size(); ++k) {
        ASSERT_EQ(a[k], b[k]);
        EXPECT_NEAR(a[k], nested[k], 1e-12 * (1.0 + std::abs(a[k])));
      }
    }
  EXPECT_THROW(Jet::constant(f.space_ptr(), 0, 1.0).d(0), JetOrderError);
}

TEST(Derivative, PartialOfDerivativeShiftsIndex) {
  auto jets = seeds4({0.3, 0.2, 1.0, -0.5}, 5);
  Jet f = composite(jets);
  Jet g = f.d(std::vector<int>{0, 1, 2, 0});
  for (const auto& alpha : multi_indices(4, 2)) {
    std::vector<int> beta = alpha;
    beta[1] += 1;
    beta[2] += 2;
    EXPECT_NEAR(g.partial(alpha), f.partial(beta), 1e-12 * (1.0 + std::abs(f.partial(beta))));
  }
}

TEST(Kernels, Avx2MatchesScalar) {
  const KernelTable* avx = avx2_kernels();
  if (!avx) GTEST_SKIP() << "AVX2 not available";
  const KernelTable& sc = scalar_kernels();
  std::mt19937_64 rng(3);
  for (int nv : {2, 4, 6, 8}) {
    auto sp = JetSpace::get(nv, 6);
    Jet a = random_jet(sp, 6, rng), b = random_jet(sp, 6, rng);
    std::vector<double> o1(a.size()), o2(a.size()), o3(a.size());
    sc.multiply(a.coeffs().data(), b.coeffs().data(), o1.data(), a.size(), sp->pair_offsets().data(),
                sp->pair_lhs().data(), sp->pair_rhs().data());
    avx->multiply(a.coeffs().data(), b.coeffs().data(), o2.data(), a.size(), sp->pair_offsets().data(),
                  sp->pair_lhs().data(), sp->pair_rhs().data());
    avx->multiply(b.coeffs().data(), a.coeffs().data(), o3.data(), a.size(), sp->pair_offsets().data(),
                  sp->pair_lhs().data(), sp->pair_rhs().data());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(o1[i], o2[i], 1e-13 * (1.0 + std::abs(o1[i])));
      ASSERT_EQ(o2[i], o3[i]);
    }
    const auto n = sp->pair_lhs().size();
    const double d1 = sc.pair_dot(a.coeffs().data(), b.coeffs().data(), sp->pair_lhs().data(), sp->pair_rhs().data(),
                                  std::min<std::size_t>(n, 37));
    const double d2 = avx->pair_dot(a.coeffs().data(), b.coeffs().data(), sp->pair_lhs().data(),
                                    sp->pair_rhs().data(), std::min<std::size_t>(n, 37));
    EXPECT_NEAR(d1, d2, 1e-13 * (1.0 + std::abs(d1)));
    std::vector<double> y1(a.coeffs().begin(), a.coeffs().end()), y2 = y1;
    sc.axpy(0.37, b.coeffs().data(), y1.data(), y1.size());
    avx->axpy(0.37, b.coeffs().data(), y2.data(), y2.size());
    for (std::size_t i = 0; i < y1.size(); ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15 * (1.0 + std::abs(y1[i])));
  }
}

TEST(Kernels, JetResultsAgreeAcrossVariants) {
  if (!avx2_kernels()) GTEST_SKIP() << "AVX2 not available";
  const std::vector<double> p{0.1, 0.7, -0.4, 0.6};
  ASSERT_TRUE(select_kernels("scalar"));
  Jet a = composite(seeds4(p, 6));
  ASSERT_TRUE(select_kernels("avx2"));
  Jet b = composite(seeds4(p, 6));
  ASSERT_TRUE(select_kernels("auto"));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12 * (1.0 + std::abs(a[i])));
  EXPECT_FALSE(select_kernels("neon-nope"));
}
