#include "finsler/metric/builtin.hpp"

#include <cmath>
#include <functional>
#include <json.hpp>
#include <numbers>

#include "finsler/geometry/linalg.hpp"
#include "finsler/geometry/sampling.hpp"
#include "finsler/metric/parser.hpp"

namespace finsler::metric {

using json = nlohmann::json;

const std::vector<FamilyInfo>& builtin_families() {
  static const std::vector<FamilyInfo> fams{
      {"euclidean", "flat metric L = sqrt(sum y_i^2)", "none"},
      {"riemannian_sphere", "round unit sphere in hyperspherical angles x1..xn, chart box [0.3, pi-0.3]^n", "none"},
      {"riemannian_custom", "L = sqrt(a_ij(x) y^i y^j)",
       "a: n x n symmetric table of numbers or x-expressions (default diag 1 + x_i^2/4, off-diagonal "
       "0.1 sin(x_i + x_j))"},
      {"randers", "L = sqrt(a_ij(x) y^i y^j) + b_i(x) y^i, requires |b|_a < 1",
       "a: n x n table (default delta_ij + 0.1 x_i x_j); b: n-vector (default 0.3 cos x2, 0.2 sin x1, 0.1 x1, "
       "0.1 x2, ...)"},
      {"minkowski_quartic", "L = (sum y_i^4)^(1/4), x-independent", "none"},
  };
  return fams;
}

namespace {

ExprPtr entry_expr(const json& v, int dim, const std::string& where) {
  if (v.is_number()) return expr::constant(v.get<double>());
  if (v.is_string()) {
    ExprPtr e;
    try {
      e = parse_expression(v.get<std::string>(), dim);
    } catch (const ParseError& err) {
      throw MetricError(where + ": " + err.what());
    }
    // coefficients live on the base manifold
    std::function<bool(const ExprPtr&)> has_y = [&](const ExprPtr& n) {
      if (n->kind == NodeKind::VarY) return true;
      for (const auto& a : n->args)
        if (has_y(a)) return true;
      return false;
    };
    if (has_y(e)) throw MetricError(where + ": coefficients may only depend on x");
    return e;
  }
  throw MetricError(where + ": entries must be numbers or expression strings");
}

std::vector<std::vector<ExprPtr>> table2(const json& v, int dim, const std::string& name) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw MetricError("parameter '" + name + "' must be a " + std::to_string(dim) + " x " + std::to_string(dim) +
                      " table");
  std::vector<std::vector<ExprPtr>> t(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) {
    if (!v[i].is_array() || static_cast<int>(v[i].size()) != dim)
      throw MetricError("parameter '" + name + "' row " + std::to_string(i + 1) + " must have " +
                        std::to_string(dim) + " entries");
    for (int j = 0; j < dim; ++j)
      t[i].push_back(entry_expr(v[i][j], dim, name + "[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]"));
  }
  return t;
}

std::vector<ExprPtr> table1(const json& v, int dim, const std::string& name) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim)
    throw MetricError("parameter '" + name + "' must have " + std::to_string(dim) + " entries");
  std::vector<ExprPtr> t;
  for (int i = 0; i < dim; ++i) t.push_back(entry_expr(v[i], dim, name + "[" + std::to_string(i + 1) + "]"));
  return t;
}

bool is_zero_constant(const ExprPtr& e) { return e->kind == NodeKind::Constant && e->value == 0.0; }

// sum_ij a_ij y^i y^j with symmetric pairs merged: a_ii y_i^2 + 2 a_ij y_i y_j (i<j)
ExprPtr quadratic_form(const std::vector<std::vector<ExprPtr>>& a, int n) {
  std::vector<ExprPtr> terms;
  for (int i = 0; i < n; ++i) {
    if (!is_zero_constant(a[i][i])) terms.push_back(expr::mul(a[i][i], expr::pow(expr::y(i), 2)));
    for (int j = i + 1; j < n; ++j) {
      if (is_zero_constant(a[i][j])) continue;
      terms.push_back(expr::mul(expr::mul(expr::constant(2.0), a[i][j]), expr::mul(expr::y(i), expr::y(j))));
    }
  }
  if (terms.empty()) throw MetricError("quadratic form is identically zero");
  return expr::sum(terms);
}

void require_symmetric(const std::vector<std::vector<ExprPtr>>& a, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!same_tree(a[i][j], a[j][i]))
        throw MetricError("parameter 'a' must be symmetric (entries " + std::to_string(i + 1) + "," +
                          std::to_string(j + 1) + " differ)");
}

json parse_params(const std::string& text) {
  json p;
  try {
    p = text.empty() ? json::object() : json::parse(text);
  } catch (const json::parse_error& e) {
    throw MetricError(std::string("params are not valid JSON: ") + e.what());
  }
  if (!p.is_object()) throw MetricError("params must be a JSON object");
  return p;
}

void reject_unknown(const json& p, std::initializer_list<const char*> allowed, const std::string& family) {
  for (const auto& [key, _] : p.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw MetricError("family '" + family + "' has no parameter '" + key + "'");
  }
}

std::vector<std::vector<double>> eval_table(const std::vector<std::vector<ExprPtr>>& a, const std::vector<double>& v) {
  std::vector<std::vector<double>> out;
  for (const auto& row : a) {
    out.emplace_back();
    for (const auto& e : row) out.back().push_back(evaluate(e, v));
  }
  return out;
}

// ||b||_a at probe points: box corners, centre and a fixed pseudo-random set.
void check_randers_bound(const std::vector<std::vector<ExprPtr>>& a, const std::vector<ExprPtr>& b, int n,
                         const Domain& dom) {
  std::vector<std::vector<double>> probes;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = (mask >> i & 1) ? dom.x_box[i].second : dom.x_box[i].first;
    probes.push_back(x);
  }
  std::vector<double> centre(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) centre[i] = 0.5 * (dom.x_box[i].first + dom.x_box[i].second);
  probes.push_back(centre);
  geometry::SplitMix64 rng(0x5eed);
  for (int k = 0; k < 64; ++k) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(dom.x_box[i].first, dom.x_box[i].second);
    probes.push_back(x);
  }
  for (const auto& x : probes) {
    std::vector<double> v = x;
    v.resize(static_cast<std::size_t>(2 * n), 0.0);
    const auto av = eval_table(a, v);
    std::vector<double> flat;
    for (const auto& row : av) flat.insert(flat.end(), row.begin(), row.end());
    std::vector<double> bv;
    for (const auto& e : b) bv.push_back(evaluate(e, v));
    const auto ev = geometry::linalg::symmetric_eigenvalues(flat, n);
    if (!(ev[0] > 0.0)) throw MetricError("randers: a is not positive definite at a probe point");
    const auto sol = geometry::linalg::solve(flat, bv, n);
    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += bv[i] * sol[i];
    if (!(norm2 < 1.0)) {
      std::string where;
      for (int i = 0; i < n; ++i) where += (i ? "," : "") + std::to_string(x[i]);
      throw MetricError("randers: |b|_a = " + std::to_string(std::sqrt(norm2)) + " >= 1 at x=(" + where + ")");
    }
  }
}

ExprPtr sphere_energy(int n) {
  // dx1^2 + sin^2 x1 dx2^2 + sin^2 x1 sin^2 x2 dx3^2 + ...
  std::vector<ExprPtr> terms;
  ExprPtr warp;
  for (int k = 0; k < n; ++k) {
    ExprPtr sq = expr::pow(expr::y(k), 2);
    terms.push_back(warp ? expr::mul(warp, sq) : sq);
    ExprPtr s2 = expr::pow(expr::call(Func::Sin, expr::x(k)), 2);
    warp = warp ? expr::mul(warp, s2) : s2;
  }
  return expr::sum(terms);
}

}  // namespace

MetricPtr builtin_metric(const std::string& family, int n, const std::string& params_json) {
  if (n < 2 || n > 6) throw MetricError("dimension must be in 2..6");
  const json p = parse_params(params_json);
  const std::string echo = p.dump();
  MetricTraits traits;
  traits.family = family;
  Domain dom;
  dom.x_box.assign(static_cast<std::size_t>(n), {-1.0, 1.0});

  if (family == "euclidean") {
    reject_unknown(p, {}, family);
    std::vector<ExprPtr> t;
    for (int i = 0; i < n; ++i) t.push_back(expr::pow(expr::y(i), 2));
    traits.riemannian = true;
    return std::make_shared<const MetricSpec>(n, expr::call(Func::Sqrt, expr::sum(t)), "Euclidean norm", traits, dom,
                                              echo);
  }
  if (family == "riemannian_sphere") {
    reject_unknown(p, {}, family);
    traits.riemannian = true;
    traits.sphere = true;
    dom.x_box.assign(static_cast<std::size_t>(n), {0.3, std::numbers::pi - 0.3});
    return std::make_shared<const MetricSpec>(n, expr::call(Func::Sqrt, sphere_energy(n)),
                                              "round unit sphere, hyperspherical chart", traits, dom, echo);
  }
  if (family == "riemannian_custom") {
    reject_unknown(p, {"a"}, family);
    json a = p.value("a", json());
    if (a.is_null()) {
      a = json::array();
      for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) {
          if (i == j)
            row.push_back("1 + x" + std::to_string(i + 1) + "^2/4");
          else
            row.push_back("0.1*sin(x" + std::to_string(std::min(i, j) + 1) + " + x" + std::to_string(std::max(i, j) + 1) +
                          ")");
        }
        a.push_back(row);
      }
    }
    const auto at = table2(a, n, "a");
    require_symmetric(at, n);
    traits.riemannian = true;
    json full = p;
    full["a"] = a;
    return std::make_shared<const MetricSpec>(n, expr::call(Func::Sqrt, quadratic_form(at, n)),
                                              "Riemannian metric a_ij(x)", traits, dom, full.dump());
  }
  if (family == "randers") {
    reject_unknown(p, {"a", "b"}, family);
    json a = p.value("a", json());
    json b = p.value("b", json());
    if (a.is_null()) {
      a = json::array();
      for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) {
          const std::string xi = "x" + std::to_string(std::min(i, j) + 1), xj = "x" + std::to_string(std::max(i, j) + 1);
          row.push_back(i == j ? "1 + 0.1*" + xi + "^2" : "0.1*" + xi + "*" + xj);
        }
        a.push_back(row);
      }
    }
    if (b.is_null()) {
      b = json::array({"0.3*cos(x2)", "0.2*sin(x1)"});
      for (int i = 2; i < n; ++i) b.push_back("0.1*x" + std::to_string((i % 2) + 1));
    }
    const auto at = table2(a, n, "a");
    require_symmetric(at, n);
    const auto bt = table1(b, n, "b");
    check_randers_bound(at, bt, n, dom);
    std::vector<ExprPtr> lin;
    for (int i = 0; i < n; ++i)
      if (!is_zero_constant(bt[i])) lin.push_back(expr::mul(bt[i], expr::y(i)));
    ExprPtr alpha = expr::call(Func::Sqrt, quadratic_form(at, n));
    ExprPtr L = lin.empty() ? alpha : expr::add(alpha, expr::sum(lin));
    dom.min_L = 0.1;
    json full = p;
    full["a"] = a;
    full["b"] = b;
    return std::make_shared<const MetricSpec>(n, L, "Randers metric", traits, dom, full.dump());
  }
  if (family == "minkowski_quartic") {
    reject_unknown(p, {}, family);
    std::vector<ExprPtr> t;
    for (int i = 0; i < n; ++i) t.push_back(expr::pow(expr::y(i), 4));
    return std::make_shared<const MetricSpec>(n, expr::pow(expr::sum(t), 0.25), "quartic Minkowski norm", traits, dom,
                                              echo);
  }
  throw MetricError("unknown metric family '" + family + "'");
}

MetricPtr metric_from_json(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw MetricError(std::string("metric file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MetricError("metric file must hold a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw MetricError("metric file needs an integer 'dim'");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw MetricError("metric file needs 'kind'");
  if (!doc.contains("body") || !doc["body"].is_string()) throw MetricError("metric file needs a string 'body'");
  const int dim = doc["dim"].get<int>();
  const std::string kind = doc["kind"];
  const std::string body = doc["body"];
  if (kind == "expression") {
    try {
      return parse_metric(body, dim);
    } catch (const ParseError& e) {
      throw MetricError(std::string("metric expression: ") + e.what());
    }
  }
  if (kind == "family") return builtin_metric(body, dim, doc.value("params", json::object()).dump());
  throw MetricError("metric kind must be 'expression' or 'family'");
}

}  // namespace finsler::metric
