#include "finsler/metric/expr.hpp"

#include <cstdio>
#include <cstring>

namespace finsler::metric {

namespace expr {
namespace {
ExprPtr node(NodeKind k, std::vector<ExprPtr> args, double value = 0.0) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->args = std::move(args);
  n->value = value;
  return n;
}
}  // namespace

ExprPtr constant(double c) {
  // negative literals do not exist in the grammar
  if (c < 0.0 || (c == 0.0 && std::signbit(c))) return neg(constant(-c));
  return node(NodeKind::Constant, {}, c);
}
ExprPtr x(int i) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::VarX;
  n->index = i;
  return n;
}
ExprPtr y(int i) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::VarY;
  n->index = i;
  return n;
}
ExprPtr neg(ExprPtr a) { return node(NodeKind::Neg, {std::move(a)}); }
ExprPtr add(ExprPtr a, ExprPtr b) { return node(NodeKind::Add, {std::move(a), std::move(b)}); }
ExprPtr sub(ExprPtr a, ExprPtr b) { return node(NodeKind::Sub, {std::move(a), std::move(b)}); }
ExprPtr mul(ExprPtr a, ExprPtr b) { return node(NodeKind::Mul, {std::move(a), std::move(b)}); }
ExprPtr div(ExprPtr a, ExprPtr b) { return node(NodeKind::Div, {std::move(a), std::move(b)}); }
ExprPtr pow(ExprPtr a, double p) { return node(NodeKind::Pow, {std::move(a)}, p); }
ExprPtr call(Func f, ExprPtr a) {
  auto n = std::make_shared<ExprNode>();
  n->kind = NodeKind::Call;
  n->func = f;
  n->args = {std::move(a)};
  return n;
}
ExprPtr sum(const std::vector<ExprPtr>& terms) {
  if (terms.empty()) throw std::invalid_argument("empty sum");
  ExprPtr acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = add(acc, terms[i]);
  return acc;
}
}  // namespace expr

const char* func_name(Func f) {
  switch (f) {
    case Func::Sqrt: return "sqrt";
    case Func::Exp: return "exp";
    case Func::Log: return "log";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
  }
  return "?";
}

namespace {

std::string number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_base(const ExprNode& e) {
  return e.kind == NodeKind::Constant || e.kind == NodeKind::VarX || e.kind == NodeKind::VarY ||
         e.kind == NodeKind::Call || e.kind == NodeKind::Neg;
}

std::string render(const ExprNode& e);

std::string as_base(const ExprNode& e) { return is_base(e) ? render(e) : "(" + render(e) + ")"; }

// operand of * or /: a factor, i.e. anything but a sum
std::string as_factor(const ExprNode& e) {
  return (e.kind == NodeKind::Add || e.kind == NodeKind::Sub) ? "(" + render(e) + ")" : render(e);
}

std::string as_right_factor(const ExprNode& e) {
  return (e.kind == NodeKind::Add || e.kind == NodeKind::Sub || e.kind == NodeKind::Mul || e.kind == NodeKind::Div)
             ? "(" + render(e) + ")"
             : render(e);
}

std::string as_right_term(const ExprNode& e) {
  return (e.kind == NodeKind::Add || e.kind == NodeKind::Sub) ? "(" + render(e) + ")" : render(e);
}

std::string render(const ExprNode& e) {
  switch (e.kind) {
    case NodeKind::Constant: return number(e.value);
    case NodeKind::VarX: return "x" + std::to_string(e.index + 1);
    case NodeKind::VarY: return "y" + std::to_string(e.index + 1);
    case NodeKind::Neg: return "-" + as_base(*e.args[0]);
    case NodeKind::Add: return render(*e.args[0]) + " + " + as_right_term(*e.args[1]);
    case NodeKind::Sub: return render(*e.args[0]) + " - " + as_right_term(*e.args[1]);
    case NodeKind::Mul: return as_factor(*e.args[0]) + "*" + as_right_factor(*e.args[1]);
    case NodeKind::Div: return as_factor(*e.args[0]) + "/" + as_right_factor(*e.args[1]);
    case NodeKind::Pow: return as_base(*e.args[0]) + "^" + number(e.value);
    case NodeKind::Call: return std::string(func_name(e.func)) + "(" + render(*e.args[0]) + ")";
  }
  return "";
}

}  // namespace

std::string unparse(const ExprPtr& e) { return render(*e); }

bool same_tree(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind || a->args.size() != b->args.size()) return false;
  switch (a->kind) {
    case NodeKind::Constant:
    case NodeKind::Pow:
      if (std::memcmp(&a->value, &b->value, sizeof(double)) != 0) return false;
      break;
    case NodeKind::VarX:
    case NodeKind::VarY:
      if (a->index != b->index) return false;
      break;
    case NodeKind::Call:
      if (a->func != b->func) return false;
      break;
    default: break;
  }
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!same_tree(a->args[i], b->args[i])) return false;
  return true;
}

bool depends_on_x(const ExprPtr& e) {
  if (e->kind == NodeKind::VarX) return true;
  for (const auto& a : e->args)
    if (depends_on_x(a)) return true;
  return false;
}

int max_variable_index(const ExprPtr& e) {
  int m = (e->kind == NodeKind::VarX || e->kind == NodeKind::VarY) ? e->index : -1;
  for (const auto& a : e->args) m = std::max(m, max_variable_index(a));
  return m;
}

namespace detail {

jets::Jet eval_jet_checked(const ExprNode& e, const std::vector<jets::Jet>& vars, int n) {
  std::vector<jets::Jet> args;
  args.reserve(e.args.size());
  for (const auto& a : e.args) args.push_back(eval_jet_checked(*a, vars, n));
  try {
    switch (e.kind) {
      case NodeKind::Constant: return jets::Jet::constant(vars[0].space_ptr(), vars[0].order(), e.value);
      case NodeKind::VarX: return vars[static_cast<std::size_t>(e.index)];
      case NodeKind::VarY: return vars[static_cast<std::size_t>(n + e.index)];
      case NodeKind::Neg: return -args[0];
      case NodeKind::Add: return args[0] + args[1];
      case NodeKind::Sub: return args[0] - args[1];
      case NodeKind::Mul: return args[0] * args[1];
      case NodeKind::Div: return args[0] / args[1];
      case NodeKind::Pow: return jets::pow(args[0], e.value);
      case NodeKind::Call: return apply(e.func, args[0]);
    }
  } catch (const ExprDomainError&) {
    throw;
  } catch (const jets::JetDomainError& err) {
    throw ExprDomainError(std::string(err.what()) + " in '" + render(e) + "'");
  }
  return vars[0];
}

}  // namespace detail

}  // namespace finsler::metric
