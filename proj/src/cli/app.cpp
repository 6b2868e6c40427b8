#include "finsler/cli/app.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "finsler/identities/report.hpp"
#include "finsler/metric/builtin.hpp"
#include "finsler/metric/parser.hpp"
#include "finsler/metric/validate.hpp"

namespace finsler::cli {

using nlohmann::ordered_json;
using identities::Obj;

metric::MetricPtr load_metric(const std::string& source, int dim, const std::string& params_json) {
  try {
    if (source.rfind("builtin:", 0) == 0) return metric::builtin_metric(source.substr(8), dim, params_json);
    if (source.rfind("expr:", 0) == 0) return metric::parse_metric(source.substr(5), dim);
    std::ifstream in(source);
    if (!in) throw ConfigError("cannot read metric file '" + source + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return metric::metric_from_json(ss.str());
  } catch (const metric::MetricError& e) {
    throw ConfigError(std::string("metric: ") + e.what());
  } catch (const metric::ParseError& e) {
    throw ConfigError(std::string("metric expression: ") + e.what());
  }
}

namespace {

struct Common {
  std::string metric = "builtin:euclidean";
  std::string params = "{}";
  int dim = 2;
  int order = geometry::kDefaultOrder;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--metric", c.metric, "builtin:NAME, expr:\"L(x,y)\" or a JSON metric file")->capture_default_str();
  app->add_option("--params", c.params, "JSON parameters for builtin families")->capture_default_str();
  app->add_option("--dim", c.dim, "chart dimension (ignored for metric files)")->capture_default_str();
  app->add_option("--order", c.order, "jet truncation order")->capture_default_str();
  app->add_option("--out", c.out, "output file (default: standard output)");
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  f << text;
}

ordered_json metric_json(const metric::MetricSpec& m) {
  ordered_json j;
  j["family"] = m.traits().family;
  j["description"] = m.description();
  j["dim"] = m.dim();
  j["params"] = ordered_json::parse(m.params_json());
  return j;
}

metric::MetricPtr validated_metric(const Common& c, std::uint64_t seed) {
  auto m = load_metric(c.metric, c.dim, c.params);
  auto v = metric::validate_metric(*m, 20, seed);
  if (!v.pass) {
    std::ostringstream os;
    os << "metric validation failed (homogeneity residual " << v.homogeneity_max << ", positivity violations "
       << v.positivity_violations << ")";
    if (!v.first_problem.empty()) os << ": " << v.first_problem;
    throw ConfigError(os.str());
  }
  return m;
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  Common c;
  int points = 20;
  std::uint64_t seed = 42;
  double tol = identities::kDefaultTolerance;
  std::vector<std::string> ids;
  std::vector<std::string> tol_overrides;
  bool no_detail = false;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const auto t0 = std::chrono::steady_clock::now();
  if (a.points < 1) throw ConfigError("--points must be at least 1");
  if (!(a.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (a.c.format != "json" && a.c.format != "csv") throw ConfigError("--format must be json or csv");
  auto selected = identities::select(a.ids);
  if (selected.empty()) throw ConfigError("no identity matches the --ids filter");
  int need = 0;
  std::string needer;
  for (const auto* id : selected)
    if (id->d.min_order > need) {
      need = id->d.min_order;
      needer = id->d.id;
    }
  if (a.c.order < need)
    throw ConfigError("--order " + std::to_string(a.c.order) + " is below the minimum " + std::to_string(need) +
                      " required by the selected identities (e.g. " + needer + ")");

  identities::CheckOptions opt;
  opt.points = a.points;
  opt.seed = a.seed;
  opt.tolerance = a.tol;
  opt.order = a.c.order;
  opt.ids = a.ids;
  for (const auto& o : a.tol_overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("--tol-override expects ID=VALUE, got '" + o + "'");
    try {
      opt.tolerance_overrides[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--tol-override: bad value in '" + o + "'");
    }
  }

  auto metric = validated_metric(a.c, a.seed);
  auto res = identities::check_all(metric, opt);

  int gating = 0, passed = 0, failed = 0, skipped = 0, errors = 0;
  for (const auto& s : res.summaries) {
    if (!s.gating) continue;
    ++gating;
    switch (s.verdict) {
      case identities::Verdict::Pass: ++passed; break;
      case identities::Verdict::Fail: ++failed; break;
      case identities::Verdict::Skipped: ++skipped; break;
      case identities::Verdict::Error: ++errors; break;
    }
  }
  const bool ok = res.all_pass();

  if (a.c.format == "csv") {
    emit(identities::summary_csv(res.summaries), a.c.out, out);
  } else {
    ordered_json env;
    env["schema"] = "finsler-check-report";
    env["schema_version"] = kSchemaVersion;
    env["tool"] = {{"name", "finsler"}, {"version", kToolVersion}};
    ordered_json cfg;
    cfg["metric"] = a.c.metric;
    cfg["params"] = ordered_json::parse(a.c.params);
    cfg["dim"] = metric->dim();
    cfg["order"] = a.c.order;
    cfg["points"] = a.points;
    cfg["seed"] = a.seed;
    cfg["tolerance"] = a.tol;
    cfg["ids"] = a.ids;
    ordered_json ov = ordered_json::object();
    for (const auto& [k, v] : opt.tolerance_overrides) ov[k] = v;
    cfg["tolerance_overrides"] = ov;
    env["config"] = cfg;
    env["metric"] = metric_json(*metric);
    ordered_json pts = ordered_json::array();
    for (const auto& p : res.points) pts.push_back({{"x", p.x}, {"y", p.y}});
    env["points"] = pts;
    env["totals"] = {{"identities", res.summaries.size()}, {"gating", gating},   {"passed", passed},
                     {"failed", failed},                   {"skipped", skipped}, {"errors", errors},
                     {"all_pass", ok}};
    ordered_json sums = ordered_json::array();
    for (const auto& s : res.summaries) sums.push_back(identities::to_json(s));
    env["summaries"] = sums;
    if (!a.no_detail) env["records"] = identities::records_json(res.records);
    env["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    emit(env.dump(2) + "\n", a.c.out, out);
  }

  for (const auto& s : res.summaries)
    if (s.gating && (s.verdict == identities::Verdict::Fail || s.verdict == identities::Verdict::Error))
      err << "FAIL " << s.id << " worst relative residual " << s.worst_relative << " at point " << s.worst_point
          << "\n";
  if (!a.c.out.empty())
    out << passed << " passed, " << failed << " failed, " << errors << " errors, " << skipped << " skipped of "
        << gating << " gating identities\n";
  return ok ? kOk : kIdentityFailure;
}

// ---------------------------------------------------------------- compute

struct ObjectInfo {
  const char* name;
  const char* convention;
  bool per_connection;
};

const std::vector<ObjectInfo>& objects() {
  static const std::vector<ObjectInfo> v{
      {"L", "fundamental function", false},
      {"g", "g_ij = (1/2) d^2 L^2 / dy^i dy^j", false},
      {"g_inv", "g^ij", false},
      {"C", "C_ijk = (1/4) d^3 L^2 / dy^i dy^j dy^k", false},
      {"spray", "G^i with geodesics x'' + 2 G(x, x') = 0", false},
      {"N", "N(i,j) = N^i_j = dG^i/dy^j (Barthel connection)", false},
      {"dN", "dN(i,j,k) = d^2 G^i / dy^j dy^k", false},
      {"Htensor", "H(i,j) = Rhat(eta, e_j)^i", false},
      {"H", "H(i,j,k) = (D_{delta_k} e_j)^i", true},
      {"V", "V(i,j,k) = (D_{d/dy^k} e_j)^i", true},
      {"Q", "Q(i,x,y) = Q(e_x,e_y)^i, h(h)-torsion", true},
      {"T", "T(i,x,y) = T(e_x,e_y)^i, (h)hv-torsion", true},
      {"Rhat", "Rhat(i,x,y) = Rhat(e_x,e_y)^i, (v)h-torsion", true},
      {"Phat", "Phat(i,x,y) = Phat(e_x,e_y)^i, (v)hv-torsion, first argument horizontal", true},
      {"Shat", "Shat(i,x,y) = Shat(e_x,e_y)^i, (v)v-torsion", true},
      {"R", "R(i,x,y,z) = (R(e_x,e_y)e_z)^i, h-curvature, R(X,Y) = -D_X D_Y + D_Y D_X + D_[X,Y] on horizontal lifts",
       true},
      {"P", "P(i,x,y,z) = (P(e_x,e_y)e_z)^i, hv-curvature, X horizontal and Y vertical", true},
      {"S", "S(i,x,y,z) = (S(e_x,e_y)e_z)^i, v-curvature", true},
  };
  return v;
}

ordered_json nested(const geometry::PiTensor& t, std::size_t& pos, int depth) {
  if (depth == t.rank()) return t.data()[pos++];
  ordered_json a = ordered_json::array();
  for (int i = 0; i < t.dim(); ++i) a.push_back(nested(t, pos, depth + 1));
  return a;
}

struct ComputeArgs {
  Common c;
  std::string object;
  std::string connection = "cartan";
  std::string point;
  std::string deriv = "none";
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const ObjectInfo* info = nullptr;
  for (const auto& o : objects())
    if (a.object == o.name) info = &o;
  if (!info) {
    std::string names;
    for (const auto& o : objects()) names += std::string(names.empty() ? "" : ", ") + o.name;
    throw ConfigError("unknown object '" + a.object + "' (known: " + names + ")");
  }
  auto kind = connections::parse_connection(a.connection);
  if (!kind) throw ConfigError("unknown connection '" + a.connection + "'");
  if (a.deriv != "none" && a.deriv != "h" && a.deriv != "v") throw ConfigError("--deriv must be none, h or v");
  if (a.point.empty()) throw ConfigError("--point is required");
  auto metric = load_metric(a.c.metric, a.c.dim, a.c.params);
  geometry::ChartPoint p;
  try {
    p = geometry::parse_point(a.point);
    p.validate(metric->dim());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid point: ") + e.what());
  }

  identities::PointContext ctx(metric, p, a.c.order);
  const auto& f = ctx.frame();
  const std::string name = info->name;
  geometry::JetTensor jt;
  if (name == "L") {
    jt = geometry::JetTensor(f.n, {}, f.L);
  } else if (name == "g") {
    jt = f.g;
  } else if (name == "g_inv") {
    jt = f.g_inv;
  } else if (name == "C") {
    jt = f.C;
  } else if (name == "spray") {
    jt = f.spray;
  } else if (name == "N") {
    jt = f.N;
  } else if (name == "dN") {
    jt = f.dN;
  } else if (name == "H") {
    jt = ctx.connection(*kind).H;
  } else if (name == "V") {
    jt = ctx.connection(*kind).V;
  } else {
    static const std::map<std::string, Obj> m{{"Htensor", Obj::Htensor}, {"Q", Obj::Q},       {"T", Obj::T},
                                              {"Rhat", Obj::Rhat},       {"Phat", Obj::Phat}, {"Shat", Obj::Shat},
                                              {"R", Obj::R},             {"P", Obj::P},       {"S", Obj::S}};
    jt = ctx.jets(m.at(name), *kind);
  }
  std::string note = info->convention;
  if (a.deriv == "h") {
    jt = connections::h_cov_deriv(jt, ctx.connection(*kind));
    note += "; horizontal covariant derivative, direction in the last slot";
  } else if (a.deriv == "v") {
    jt = connections::v_cov_deriv(jt, ctx.connection(*kind));
    note += "; vertical covariant derivative, direction in the last slot";
  }
  const auto vals = geometry::values(jt);
  ordered_json j;
  j["schema"] = "finsler-compute";
  j["schema_version"] = kSchemaVersion;
  j["object"] = name;
  if (info->per_connection || a.deriv != "none") j["connection"] = connections::name(*kind);
  if (a.deriv != "none") j["derivative"] = a.deriv;
  j["metric"] = metric_json(*metric);
  j["point"] = {{"x", p.x}, {"y", p.y}};
  j["order"] = a.c.order;
  j["slots"] = geometry::slot_signature(vals.slots());
  j["convention"] = note;
  j["index_order"] = "first index outermost; 0-based coordinate indices";
  std::size_t pos = 0;
  j["components"] = nested(vals, pos, 0);
  emit(j.dump(2) + "\n", a.c.out, out);
  return kOk;
}

// ---------------------------------------------------------------- metrics

int cmd_list(std::ostream& out) {
  ordered_json a = ordered_json::array();
  for (const auto& f : metric::builtin_families())
    a.push_back({{"name", f.name}, {"summary", f.summary}, {"params", f.params}});
  out << a.dump(2) << "\n";
  return kOk;
}

int cmd_validate(const Common& c, int points, std::uint64_t seed, std::ostream& out) {
  auto m = load_metric(c.metric, c.dim, c.params);
  auto v = metric::validate_metric(*m, points, seed);
  ordered_json j;
  j["schema"] = "finsler-validation";
  j["schema_version"] = kSchemaVersion;
  j["metric"] = metric_json(*m);
  j["samples"] = v.samples;
  j["homogeneity_max"] = v.homogeneity_max;
  j["g_homogeneity_max"] = v.g_homogeneity_max;
  j["positivity_violations"] = v.positivity_violations;
  j["min_eigenvalue"] = v.min_eigenvalue;
  j["verdict"] = v.pass ? "pass" : "fail";
  if (!v.first_problem.empty()) j["first_problem"] = v.first_problem;
  emit(j.dump(2) + "\n", c.out, out);
  return v.pass ? kOk : kIdentityFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finsler connection workbench: connections, torsion, curvature and identity checks", "finsler"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "check the identity catalog at sampled points");
  add_common(check, ca.c);
  check->add_option("--points", ca.points, "number of sample points")->capture_default_str();
  check->add_option("--seed", ca.seed, "sampling seed")->capture_default_str();
  check->add_option("--tol", ca.tol, "relative residual tolerance")->capture_default_str();
  check->add_option("--ids", ca.ids, "glob(s) over identity ids")->delimiter(',');
  check->add_option("--tol-override", ca.tol_overrides, "per-identity tolerance ID=VALUE");
  check->add_option("--format", ca.c.format, "json or csv")->capture_default_str();
  check->add_flag("--no-detail", ca.no_detail, "omit per-point records");

  ComputeArgs co;
  auto* compute = app.add_subcommand("compute", "print one object at a point");
  add_common(compute, co.c);
  compute->add_option("--object", co.object, "object name")->required();
  compute->add_option("--connection", co.connection, "cartan, berwald, chern or hashiguchi")->capture_default_str();
  compute->add_option("--point", co.point, "\"x=a,b,..;y=c,d,..\"")->required();
  compute->add_option("--deriv", co.deriv, "none, h or v covariant derivative")->capture_default_str();

  Common mc;
  int vpoints = 50;
  std::uint64_t vseed = 42;
  auto* metrics = app.add_subcommand("metrics", "builtin families and metric validation");
  metrics->require_subcommand(1);
  auto* list = metrics->add_subcommand("list", "list builtin families");
  auto* validate = metrics->add_subcommand("validate", "check the Finsler axioms numerically");
  add_common(validate, mc);
  validate->add_option("--points", vpoints, "number of samples")->capture_default_str();
  validate->add_option("--seed", vseed, "sampling seed")->capture_default_str();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    if (check->parsed()) return cmd_check(ca, out, err);
    if (compute->parsed()) return cmd_compute(co, out);
    if (list->parsed()) return cmd_list(out);
    if (validate->parsed()) return cmd_validate(mc, vpoints, vseed, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const jets::JetError& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace finsler::cli
