#include "finsler/metric/metric.hpp"

#include "finsler/metric/parser.hpp"

namespace finsler::metric {

namespace {

// L = sqrt(u) gives L^2 = u; L = u^p gives L^2 = u^(2p).
ExprPtr square_of(const ExprPtr& L) {
  if (L->kind == NodeKind::Call && L->func == Func::Sqrt) return L->args[0];
  if (L->kind == NodeKind::Pow) {
    const double q = 2.0 * L->value;
    return q == 1.0 ? L->args[0] : expr::pow(L->args[0], q);
  }
  return nullptr;
}

}  // namespace

MetricSpec::MetricSpec(int dim, ExprPtr L, std::string description, MetricTraits traits, Domain domain,
                       std::string params_json)
    : dim_(dim),
      L_(std::move(L)),
      description_(std::move(description)),
      traits_(std::move(traits)),
      domain_(std::move(domain)),
      params_json_(std::move(params_json)) {
  if (dim_ < 1) throw MetricError("dimension must be positive");
  if (max_variable_index(L_) >= dim_) throw MetricError("expression uses a variable beyond the dimension");
  if (domain_.x_box.empty()) domain_.x_box.assign(static_cast<std::size_t>(dim_), {-1.0, 1.0});
  if (static_cast<int>(domain_.x_box.size()) != dim_) throw MetricError("sampling box has the wrong dimension");
  L2_ = square_of(L_);
  if (!depends_on_x(L_)) traits_.locally_minkowski = true;
}

MetricPtr parse_metric(const std::string& text, int dim) {
  if (dim < 2) throw MetricError("dimension must be at least 2");
  ExprPtr e = parse_expression(text, dim);
  MetricTraits traits;
  traits.family = "expression";
  return std::make_shared<const MetricSpec>(dim, e, text, traits, Domain{});
}

}  // namespace finsler::metric
