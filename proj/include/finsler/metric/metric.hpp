#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finsler/metric/expr.hpp"

namespace finsler::metric {

/// Invalid metric definition or parameters.
class MetricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where sample points may be drawn.
struct Domain {
  std::vector<std::pair<double, double>> x_box;  // per-coordinate range
  double min_L = 0.0;                            // reject samples with L below this
};

struct MetricTraits {
  std::string family;  // builtin tag or "expression"
  bool riemannian = false;
  bool locally_minkowski = false;  // no x dependence
  bool sphere = false;             // the round sphere chart
};

/// A Finsler fundamental function L(x, y) on an n-dimensional chart.
class MetricSpec {
 public:
  MetricSpec(int dim, ExprPtr L, std::string description, MetricTraits traits, Domain domain,
             std::string params_json = "{}");

  int dim() const { return dim_; }
  const ExprPtr& L() const { return L_; }
  /// Expression for L^2 with the outer square root removed where possible.
  const ExprPtr& energy_expression() const { return L2_; }
  const std::string& description() const { return description_; }
  const MetricTraits& traits() const { return traits_; }
  const Domain& domain() const { return domain_; }
  const std::string& params_json() const { return params_json_; }

  template <class T>
  T eval_L(const std::vector<T>& vars) const {
    return evaluate(L_, vars);
  }
  template <class T>
  T eval_L2(const std::vector<T>& vars) const {
    if (L2_) return evaluate(L2_, vars);
    T l = evaluate(L_, vars);
    return l * l;
  }

 private:
  int dim_;
  ExprPtr L_;
  ExprPtr L2_;  // null when L^2 has to be formed as L*L
  std::string description_;
  MetricTraits traits_;
  Domain domain_;
  std::string params_json_;
};

using MetricPtr = std::shared_ptr<const MetricSpec>;

/// Metric from an expression for L.
MetricPtr parse_metric(const std::string& text, int dim);

}  // namespace finsler::metric
