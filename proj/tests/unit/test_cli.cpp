#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "finsler/cli/app.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream o, e;
  int c = finsler::cli::run(args, o, e);
  return {c, o.str(), e.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("finsler_cli_" + std::to_string(::getpid()) + "_" + name);
}

double max_abs_nested(const json& j) {
  if (j.is_number()) return std::abs(j.get<double>());
  double m = 0;
  for (const auto& e : j) m = std::max(m, max_abs_nested(e));
  return m;
}

}  // namespace

TEST(CliCheck, RandersPassesAndWritesEnvelope) {
  const auto path = tmp("randers.json");
  auto r = run({"check", "--metric", "builtin:randers", "--dim", "2", "--points", "20", "--seed", "42", "--out",
                path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(slurp(path));
  EXPECT_EQ(j["schema_version"], finsler::cli::kSchemaVersion);
  EXPECT_GE(j["summaries"].size(), 60u);
  EXPECT_TRUE(j["totals"]["all_pass"].get<bool>());
  EXPECT_EQ(j["points"].size(), 20u);
  EXPECT_TRUE(j.contains("records"));
  // wall time is the last field
  std::string last;
  for (auto it = j.begin(); it != j.end(); ++it) last = it.key();
  EXPECT_EQ(last, "wall_time_s");
  std::filesystem::remove(path);
}

TEST(CliCheck, EuclideanResidualsTiny) {
  auto r = run({"check", "--metric", "builtin:euclidean", "--points", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  for (const auto& s : j["summaries"]) {
    if (s["verdict"] == "skipped") continue;
    EXPECT_LE(s["worst_relative"].get<double>(), 1e-12) << s["id"];
  }
}

TEST(CliCheck, DeterministicApartFromWallTime) {
  const std::vector<std::string> args{"check", "--metric", "builtin:randers", "--dim", "3",
                                      "--points", "4", "--seed", "42"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0);
  ASSERT_EQ(b.code, 0);
  auto strip = [](const std::string& s) {
    auto pos = s.rfind("\"wall_time_s\"");
    EXPECT_NE(pos, std::string::npos);
    return s.substr(0, pos);
  };
  EXPECT_EQ(strip(a.out), strip(b.out));
  EXPECT_NE(a.out.find("\"wall_time_s\""), std::string::npos);
}

TEST(CliCheck, CsvSummary) {
  auto r = run({"check", "--metric", "builtin:euclidean", "--points", "2", "--ids", "C1.*", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("id,worst_relative,verdict\n", 0), 0u);
  EXPECT_NE(r.out.find("C1.a,"), std::string::npos);
}

TEST(CliExitCodes, IdentityFailureIsOne) {
  // a tolerance far below round-off turns a nonzero residual into a failure
  auto r = run({"check", "--metric", "builtin:randers", "--points", "3", "--ids", "C1.a", "--tol", "1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("FAIL C1.a"), std::string::npos);
  // a diagnostic variant failing does not change the exit code
  auto d = run({"check", "--metric", "builtin:randers", "--points", "3", "--ids", "B3.f*"});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("\"B3.f.printed\""), std::string::npos);
}

TEST(CliExitCodes, ConfigAndMetricErrorsAreTwo) {
  auto bad_metric = run({"check", "--metric", "expr:y1^2+y2^2"});
  EXPECT_EQ(bad_metric.code, 2);
  EXPECT_NE(bad_metric.err.find("homogeneous"), std::string::npos);
  EXPECT_EQ(run({"check", "--metric", "builtin:nosuch"}).code, 2);
  EXPECT_EQ(run({"check", "--metric", "/nonexistent/metric.json"}).code, 2);
  EXPECT_EQ(run({"check", "--metric", "expr:sqrt(y1^2+"}).code, 2);
  EXPECT_EQ(run({"check", "--ids", "ZZ*"}).code, 2);
  auto low = run({"check", "--order", "3"});
  EXPECT_EQ(low.code, 2);
  EXPECT_NE(low.err.find("below the minimum"), std::string::npos);
  EXPECT_EQ(run({"check", "--unknown-flag"}).code, 2);
  EXPECT_EQ(run({"check", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(CliCheck, MetricFileSource) {
  const auto path = tmp("metric.json");
  {
    std::ofstream f(path);
    f << R"({"dim": 2, "kind": "family", "body": "randers", "params": {}})";
  }
  auto r = run({"check", "--metric", path.string(), "--points", "2", "--ids", "G0.*", "--no-detail"});
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_FALSE(j.contains("records"));
  EXPECT_EQ(j["metric"]["family"], "randers");
  std::filesystem::remove(path);
}

TEST(CliCompute, EuclideanMetricIsIdentity) {
  auto r = run({"compute", "--object", "g", "--metric", "builtin:euclidean", "--point", "x=0,0;y=1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["components"], json::parse("[[1.0,0.0],[0.0,1.0]]"));
  EXPECT_EQ(j["slots"], "dd");
  EXPECT_TRUE(j.contains("convention"));
}

TEST(CliCompute, BerwaldVCurvatureIsZero) {
  auto r = run({"compute", "--object", "S", "--connection", "berwald", "--metric", "builtin:randers", "--point",
                "x=0.1,-0.2;y=0.7,0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["slots"], "uddd");
  EXPECT_EQ(j["connection"], "berwald");
  EXPECT_EQ(max_abs_nested(j["components"]), 0.0);
}

TEST(CliCompute, CovariantDerivativeAddsSlot) {
  auto r = run({"compute", "--object", "g", "--connection", "cartan", "--deriv", "h", "--metric",
                "builtin:randers", "--point", "x=0.1,-0.2;y=0.7,0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["slots"], "ddd");
  EXPECT_LT(max_abs_nested(j["components"]), 1e-12);  // Cartan is h-metric
}

TEST(CliCompute, Errors) {
  EXPECT_EQ(run({"compute", "--object", "nope", "--point", "x=0,0;y=1,0"}).code, 2);
  EXPECT_EQ(run({"compute", "--object", "g", "--point", "x=0,0;y=0,0"}).code, 2);
  EXPECT_EQ(run({"compute", "--object", "g", "--point", "x=0;y=1"}).code, 2);
  EXPECT_EQ(run({"compute", "--object", "R", "--connection", "levi", "--point", "x=0,0;y=1,0"}).code, 2);
}

TEST(CliMetrics, ListAndValidate) {
  auto l = run({"metrics", "list"});
  ASSERT_EQ(l.code, 0);
  auto j = json::parse(l.out);
  EXPECT_EQ(j.size(), 5u);
  auto ok = run({"metrics", "validate", "--metric", "builtin:randers"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)["verdict"], "pass");
  auto bad = run({"metrics", "validate", "--metric", "expr:sqrt(y1^2 - y2^2)"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_GT(json::parse(bad.out)["positivity_violations"].get<int>(), 0);
}
