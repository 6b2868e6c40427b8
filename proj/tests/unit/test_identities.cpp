#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include "finsler/geometry/sampling.hpp"
#include "finsler/identities/registry.hpp"
#include "finsler/identities/report.hpp"
#include "finsler/metric/builtin.hpp"

using namespace finsler;
using namespace finsler::identities;

namespace {

Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

const IdentitySummary* summary(const CheckResult& r, const std::string& id) {
  for (const auto& s : r.summaries)
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace

TEST(Algebra, CyclicAndInterchangeOnKnownCases) {
  const Vec x{1.0, 2.0, -0.5}, y{0.3, -1.0, 4.0}, z{2.0, 0.0, 1.5};
  // x cross (y cross z) summed cyclically vanishes (Jacobi).
  auto jacobi = [](const Vec& a, const Vec& b, const Vec& c) { return cross(a, cross(b, c)); };
  EXPECT_LT(max_abs(cyclic(jacobi, x, y, z)), 1e-14);
  // a symmetric form of an antisymmetric pair: (a x b) . c is alternating, its cyclic sum is 3 det
  auto triple = [](const Vec& a, const Vec& b, const Vec& c) {
    Vec w = cross(a, b);
    return w[0] * c[0] + w[1] * c[1] + w[2] * c[2];
  };
  const double det = triple(x, y, z);
  EXPECT_NEAR(cyclic(triple, x, y, z), 3.0 * det, 1e-13);
  // interchange of a symmetric expression vanishes, of an antisymmetric one doubles
  auto sym = [](const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1]; };
  auto anti = [](const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; };
  EXPECT_EQ(interchange(sym, x, y), 0.0);
  EXPECT_DOUBLE_EQ(interchange(anti, x, y), 2.0 * anti(x, y));
}

TEST(Algebra, SparseContraction) {
  PiTensor A(2, geometry::slots({'u', 'd', 'd'}), 0.0);
  for (std::size_t i = 0; i < A.size(); ++i) A.data()[i] = static_cast<double>(i) + 1.0;
  // A^i_jk u^j v^k by hand
  const Vec u{2.0, -1.0}, v{0.5, 3.0};
  Vec want(2, 0.0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) want[i] += A(i, j, k) * u[j] * v[k];
  EXPECT_LT(max_abs(vec(A, {u, v}) - want), 1e-14);
  EXPECT_EQ(vec(A, {Arg::basis(1), Arg::basis(0)})[1], A(1, 1, 0));
  PiTensor g(2, geometry::slots({'d', 'd'}), 0.0);
  g(0, 0) = 2.0;
  g(1, 1) = 3.0;
  g(0, 1) = g(1, 0) = 0.5;
  EXPECT_DOUBLE_EQ(scal(g, {u, v}), dot(g, u, v));
}

TEST(Catalog, UniqueSortedAndLargeEnough) {
  const auto cat = catalog();
  EXPECT_GE(cat.size(), 60u);
  for (std::size_t i = 1; i < cat.size(); ++i) EXPECT_LT(cat[i - 1].id, cat[i].id);
  for (const char* id : {"C2.d", "X2.berwald.R", "C1.e", "B2", "B3.f", "B3.f.printed"})
    EXPECT_NE(find_identity(id), nullptr) << id;
  EXPECT_NE(find_identity("C2.d")->d.statement.find("g(T(X,W), T(Y,Z))"), std::string::npos);
  EXPECT_FALSE(find_identity("B3.f.printed")->d.gating);
  EXPECT_EQ(find_identity("nope"), nullptr);
}

TEST(Catalog, EveryGroupPresent) {
  std::set<std::string> prefixes;
  for (const auto& d : catalog()) prefixes.insert(d.id.substr(0, d.id.find('.')));
  for (const char* g : {"G0", "G1", "G2", "G3", "C0", "C1", "C2", "C3", "C4", "B0", "B1", "B2", "B3", "B4", "B5",
                        "H0", "H1", "H2", "H3", "H4", "H5", "S0", "S1", "S2", "S3", "S4", "X1", "X2"})
    EXPECT_TRUE(prefixes.count(g)) << g;
}

TEST(Catalog, GeneralIdentitiesForEveryConnection) {
  for (const char* item : {"G1.%s.a", "G1.%s.b", "G1.%s.c", "G2.%s.a", "G2.%s.b", "G2.%s.c", "G2.%s.d", "G3.%s.a",
                           "G3.%s.b", "G3.%s.c", "G0.%s.regular", "G0.%s.bracket.a"})
    for (auto c : connections::kAllConnections) {
      char buf[64];
      std::snprintf(buf, sizeof buf, item, connections::name(c));
      const Identity* id = find_identity(buf);
      ASSERT_NE(id, nullptr) << buf;
      EXPECT_EQ(id->d.connections.front(), c);
    }
}

TEST(Catalog, GlobSelection) {
  EXPECT_TRUE(glob_match("C2.*", "C2.d"));
  EXPECT_TRUE(glob_match("*.berwald.*", "X2.berwald.R"));
  EXPECT_TRUE(glob_match("B?", "B2"));
  EXPECT_FALSE(glob_match("B?", "B3.a"));
  EXPECT_EQ(select({"C1.*"}).size(), 6u);
  EXPECT_EQ(select({}).size(), registry().size());
}

TEST(Catalog, ManifestMatches) {
  std::ifstream in(std::string(FINSLER_SOURCE_DIR) + "/docs/identity_catalog.md");
  ASSERT_TRUE(in) << "coverage manifest missing";
  std::set<std::string> listed;
  int rows = 0;
  std::string line;
  const std::regex row(R"(^\| `([A-Za-z0-9_.]+)` \|)");
  std::smatch m;
  while (std::getline(in, line))
    if (std::regex_search(line, m, row)) {
      listed.insert(m[1]);
      ++rows;
    }
  std::set<std::string> ids;
  for (const auto& d : catalog()) ids.insert(d.id);
  EXPECT_EQ(rows, static_cast<int>(ids.size()));
  EXPECT_EQ(listed, ids);
}

TEST(CheckIdentity, SingleExamples) {
  auto randers = metric::builtin_metric("randers", 2);
  auto p = geometry::Sampler(randers, 7).next();
  auto r = check_identity("C1.e", randers, p);
  EXPECT_EQ(r.verdict, Verdict::Pass) << r.relative;
  EXPECT_GT(r.scale, 1.0 - 1e-15);
  EXPECT_EQ(r.relative, r.residual / r.scale);

  auto b2 = check_identity("B2", randers, p);
  EXPECT_EQ(b2.residual, 0.0);
  EXPECT_EQ(b2.verdict, Verdict::Pass);

  auto euclid = metric::builtin_metric("euclidean", 2);
  auto c2d = check_identity("C2.d", euclid, geometry::parse_point("x=0,0;y=1,2"));
  EXPECT_EQ(c2d.verdict, Verdict::Pass);
  EXPECT_EQ(c2d.residual, 0.0);

  EXPECT_THROW(check_identity("nope", randers, p), std::invalid_argument);
}

TEST(CheckIdentity, GuardsSkipNeverPass) {
  auto randers = metric::builtin_metric("randers", 2);
  auto p = geometry::Sampler(randers, 1).next();
  for (const char* id : {"B5.flat", "B5.curved", "H4"}) {
    auto r = check_identity(id, randers, p);
    EXPECT_EQ(r.verdict, Verdict::Skipped) << id;
    EXPECT_NE(r.message.find("not applicable"), std::string::npos);
  }
  auto quartic = metric::builtin_metric("minkowski_quartic", 2);
  EXPECT_EQ(check_identity("B5.flat", quartic, geometry::Sampler(quartic, 1).next()).verdict, Verdict::Pass);
  EXPECT_EQ(check_identity("H4", quartic, geometry::Sampler(quartic, 1).next()).verdict, Verdict::Pass);
  auto sphere = metric::builtin_metric("riemannian_sphere", 2);
  auto ps = geometry::Sampler(sphere, 1).next();
  EXPECT_EQ(check_identity("B5.curved", sphere, ps).verdict, Verdict::Pass);
  EXPECT_EQ(check_identity("H4", sphere, ps).verdict, Verdict::Pass);
}

// Each identity evaluates at its declared minimum order and reports a
// jet-order error one order below.
TEST(CheckIdentity, DeclaredMinimumOrder) {
  auto randers = metric::builtin_metric("randers", 2);
  auto quartic = metric::builtin_metric("minkowski_quartic", 2);
  auto sphere = metric::builtin_metric("riemannian_sphere", 2);
  for (const auto& id : registry()) {
    auto m = id.d.guard == Guard::None ? randers : id.d.guard == Guard::Sphere ? sphere : quartic;
    auto p = geometry::Sampler(m, 3).next();
    auto ok = check_identity(id.d.id, m, p, kDefaultTolerance, id.d.min_order);
    EXPECT_NE(ok.verdict, Verdict::Error) << id.d.id << " at order " << id.d.min_order << ": " << ok.message;
    auto low = check_identity(id.d.id, m, p, kDefaultTolerance, id.d.min_order - 1);
    EXPECT_EQ(low.verdict, Verdict::Error) << id.d.id << " should need order " << id.d.min_order;
    EXPECT_NE(low.message.find("order"), std::string::npos);
  }
}

TEST(CheckAll, RandersPassesAndTyposAreFlagged) {
  CheckOptions o;
  o.points = 20;
  o.seed = 42;
  auto r = check_all(metric::builtin_metric("randers", 2), o);
  EXPECT_TRUE(r.all_pass());
  for (const auto& s : r.summaries) {
    if (!s.gating) continue;
    EXPECT_TRUE(s.verdict == Verdict::Pass || s.verdict == Verdict::Skipped) << s.id << " " << s.worst_relative;
  }
  // the corrected readings hold, the printed ones do not
  EXPECT_EQ(summary(r, "B3.f")->verdict, Verdict::Pass);
  EXPECT_EQ(summary(r, "B3.f.printed")->verdict, Verdict::Fail);
  EXPECT_EQ(summary(r, "S3.e")->verdict, Verdict::Pass);
  EXPECT_EQ(summary(r, "S3.e.printed")->verdict, Verdict::Fail);
  EXPECT_EQ(r.records.size(), r.summaries.size() * 20);
}

TEST(CheckAll, EuclideanResidualsVanish) {
  for (int n : {2, 3}) {
    CheckOptions o;
    o.points = 5;
    auto r = check_all(metric::builtin_metric("euclidean", n), o);
    for (const auto& rec : r.records) {
      if (rec.verdict == Verdict::Skipped) continue;
      EXPECT_EQ(rec.verdict, Verdict::Pass) << rec.id;
      EXPECT_LE(rec.residual, 1e-12) << rec.id;
    }
  }
}

TEST(CheckAll, DeterministicAcrossThreadCounts) {
  auto m = metric::builtin_metric("randers", 2);
  CheckOptions o;
  o.points = 6;
  o.seed = 9;
  o.ids = {"C*", "X2.*"};
  o.threads = 1;
  const std::string a = records_json(check_all(m, o).records).dump();
  o.threads = 4;
  const std::string b = records_json(check_all(m, o).records).dump();
  EXPECT_EQ(a, b);
  o.seed = 10;
  EXPECT_NE(a, records_json(check_all(m, o).records).dump());
}

TEST(CheckAll, RecordsOrderedByIdThenPoint) {
  CheckOptions o;
  o.points = 3;
  o.ids = {"C3.*"};
  auto r = check_all(metric::builtin_metric("randers", 2), o);
  for (std::size_t i = 1; i < r.records.size(); ++i) {
    const auto &a = r.records[i - 1], &b = r.records[i];
    EXPECT_TRUE(a.id < b.id || (a.id == b.id && a.point_index + 1 == b.point_index));
  }
}

TEST(CheckAll, ToleranceOverrideAndFailurePropagation) {
  CheckOptions o;
  o.points = 2;
  o.ids = {"C1.a", "C1.e"};
  o.tolerance_overrides["C1.e"] = -1.0;  // unattainable
  auto r = check_all(metric::builtin_metric("randers", 2), o);
  EXPECT_EQ(summary(r, "C1.a")->verdict, Verdict::Pass);
  EXPECT_EQ(summary(r, "C1.e")->verdict, Verdict::Fail);
  EXPECT_FALSE(r.all_pass());

  o.tolerance_overrides.clear();
  o.order = 3;  // too low for any frame: every applicable record errors, the sweep completes
  r = check_all(metric::builtin_metric("randers", 2), o);
  ASSERT_EQ(r.records.size(), 4u);
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.verdict, Verdict::Error);
    EXPECT_NE(rec.message.find("order"), std::string::npos);
  }
}

TEST(Report, CsvAndJsonShape) {
  CheckOptions o;
  o.points = 2;
  o.ids = {"B2", "C1.*"};
  auto r = check_all(metric::builtin_metric("randers", 2), o);
  const std::string csv = summary_csv(r.summaries);
  EXPECT_EQ(csv.rfind("id,worst_relative,verdict\n", 0), 0u);
  EXPECT_NE(csv.find("B2,0.000000e+00,pass"), std::string::npos);
  auto j = records_json(r.records);
  ASSERT_EQ(j.size(), r.records.size());
  EXPECT_EQ(j[0]["id"], "B2");
  EXPECT_FALSE(j[0].contains("elapsed_ms"));
  EXPECT_TRUE(records_json(r.records, true)[0].contains("elapsed_ms"));
}
