#include "finsler/metric/parser.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>

namespace finsler::metric {

ParseError::ParseError(std::string message, std::size_t offset)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + message), detail_(std::move(message)),
      offset_(offset) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dim) : s_(text), dim_(dim) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, std::size_t at) { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input", pos_);
    if (s_[pos_] == ',') fail("arity mismatch: functions take exactly one argument", pos_);
    if (s_[pos_] != c) fail(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (true) {
      if (accept('+'))
        lhs = expr::add(lhs, parse_term());
      else if (accept('-'))
        lhs = expr::sub(lhs, parse_term());
      else
        return lhs;
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (true) {
      if (accept('*'))
        lhs = expr::mul(lhs, parse_factor());
      else if (accept('/'))
        lhs = expr::div(lhs, parse_factor());
      else
        return lhs;
    }
  }

  ExprPtr parse_factor() {
    ExprPtr b = parse_base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        negative = s_[pos_] == '-';
        ++pos_;
      }
      if (pos_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
        fail("exponent must be a signed number", start);
      double p = parse_number();
      b = expr::pow(b, negative ? -p : p);
    }
    return b;
  }

  double parse_number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        pos_ = q;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto res = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (res.ec != std::errc() || res.ptr != s_.data() + pos_) fail("malformed number", start);
    return v;
  }

  ExprPtr parse_base() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (c == '-') {
      ++pos_;
      return expr::neg(parse_base());
    }
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return expr::constant(parse_number());
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail("unexpected '" + std::string(1, c) + "'", pos_);
  }

  ExprPtr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);

    if ((word[0] == 'x' || word[0] == 'y') && word.size() > 1 &&
        word.find_first_not_of("0123456789", 1) == std::string_view::npos) {
      int idx = 0;
      std::from_chars(word.data() + 1, word.data() + word.size(), idx);
      if (idx < 1 || idx > dim_)
        fail("variable '" + std::string(word) + "' out of range 1.." + std::to_string(dim_), start);
      return word[0] == 'x' ? expr::x(idx - 1) : expr::y(idx - 1);
    }

    static constexpr std::pair<std::string_view, Func> funcs[] = {
        {"sqrt", Func::Sqrt}, {"exp", Func::Exp}, {"log", Func::Log}, {"sin", Func::Sin}, {"cos", Func::Cos}};
    for (const auto& [name, f] : funcs) {
      if (word != name) continue;
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '(') fail("function '" + std::string(word) + "' needs '('", pos_);
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ')') fail("arity mismatch: '" + std::string(word) + "' takes one argument", pos_);
      ExprPtr arg = parse_expr();
      expect(')');
      return expr::call(f, arg);
    }
    fail("unknown identifier '" + std::string(word) + "'", start);
  }

  std::string_view s_;
  int dim_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text, int dim) {
  if (dim < 1) throw ParseError("dimension must be positive", 0);
  return Parser(text, dim).run();
}

}  // namespace finsler::metric
