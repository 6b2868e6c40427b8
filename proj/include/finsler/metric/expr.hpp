#pragma once

#include <cmath>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "finsler/jets/jet.hpp"

namespace finsler::metric {

enum class NodeKind { Constant, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Sqrt, Exp, Log, Sin, Cos };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Node of a metric expression. Variables are 0-based: VarX{i} is x^(i+1).
struct ExprNode {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;  // constant value, or exponent for Pow
  int index = 0;       // variable slot
  Func func = Func::Sqrt;
  std::vector<ExprPtr> args;
};

namespace expr {
ExprPtr constant(double c);
ExprPtr x(int i);
ExprPtr y(int i);
ExprPtr neg(ExprPtr a);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr mul(ExprPtr a, ExprPtr b);
ExprPtr div(ExprPtr a, ExprPtr b);
ExprPtr pow(ExprPtr a, double p);
ExprPtr call(Func f, ExprPtr a);
/// Left fold with add over a non-empty list.
ExprPtr sum(const std::vector<ExprPtr>& terms);
}  // namespace expr

const char* func_name(Func f);

/// Text in the metric grammar; parse(unparse(e)) rebuilds an identical tree.
std::string unparse(const ExprPtr& e);

/// Structural equality (constants compared bitwise).
bool same_tree(const ExprPtr& a, const ExprPtr& b);

/// True if any x-variable occurs.
bool depends_on_x(const ExprPtr& e);
/// Largest variable index used (x or y), or -1.
int max_variable_index(const ExprPtr& e);

/// Elementary function applied outside its domain while evaluating a jet;
/// the message names the smallest offending subexpression.
class ExprDomainError : public jets::JetDomainError {
 public:
  using jets::JetDomainError::JetDomainError;
};

/// Integer power by repeated squaring, the same multiply sequence as
/// jets::pow_int so that order-0 jets and doubles agree exactly.
inline double ipow(double base, int k) {
  if (k < 0) return 1.0 / ipow(base, -k);
  double result = 1.0;
  if (k == 0) return result;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

namespace detail {

inline bool integral_exponent(double p) { return p == std::trunc(p) && std::abs(p) <= 64.0; }

inline double apply(Func f, double a) {
  switch (f) {
    case Func::Sqrt: return std::sqrt(a);
    case Func::Exp: return std::exp(a);
    case Func::Log: return std::log(a);
    case Func::Sin: return std::sin(a);
    case Func::Cos: return std::cos(a);
  }
  return a;
}

inline jets::Jet apply(Func f, const jets::Jet& a) {
  switch (f) {
    case Func::Sqrt: return jets::sqrt(a);
    case Func::Exp: return jets::exp(a);
    case Func::Log: return jets::log(a);
    case Func::Sin: return jets::sin(a);
    case Func::Cos: return jets::cos(a);
  }
  return a;
}

inline double power(double a, double p) { return integral_exponent(p) ? ipow(a, static_cast<int>(p)) : std::pow(a, p); }
inline jets::Jet power(const jets::Jet& a, double p) { return jets::pow(a, p); }

template <class T>
T constant_like(const T& proto, double c) {
  if constexpr (std::is_same_v<T, double>) {
    (void)proto;
    return c;
  } else {
    return jets::Jet::constant(proto.space_ptr(), proto.order(), c);
  }
}

template <class T>
T eval_node(const ExprNode& e, const std::vector<T>& vars, int n) {
  switch (e.kind) {
    case NodeKind::Constant: return constant_like(vars[0], e.value);
    case NodeKind::VarX: return vars[static_cast<std::size_t>(e.index)];
    case NodeKind::VarY: return vars[static_cast<std::size_t>(n + e.index)];
    case NodeKind::Neg: return -eval_node(*e.args[0], vars, n);
    case NodeKind::Add: return eval_node(*e.args[0], vars, n) + eval_node(*e.args[1], vars, n);
    case NodeKind::Sub: return eval_node(*e.args[0], vars, n) - eval_node(*e.args[1], vars, n);
    case NodeKind::Mul: return eval_node(*e.args[0], vars, n) * eval_node(*e.args[1], vars, n);
    case NodeKind::Div: return eval_node(*e.args[0], vars, n) / eval_node(*e.args[1], vars, n);
    case NodeKind::Pow: return power(eval_node(*e.args[0], vars, n), e.value);
    case NodeKind::Call: return apply(e.func, eval_node(*e.args[0], vars, n));
  }
  return vars[0];
}

jets::Jet eval_jet_checked(const ExprNode& e, const std::vector<jets::Jet>& vars, int n);

}  // namespace detail

/// Evaluate with vars = (x^1..x^n, y^1..y^n), as doubles or jets.
template <class T>
T evaluate(const ExprPtr& e, const std::vector<T>& vars) {
  const int n = static_cast<int>(vars.size() / 2);
  if constexpr (std::is_same_v<T, jets::Jet>) {
    return detail::eval_jet_checked(*e, vars, n);
  } else {
    return detail::eval_node(*e, vars, n);
  }
}

}  // namespace finsler::metric
