#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "finsler/metric/expr.hpp"

namespace finsler::metric {

/// Parse failure with the byte offset of the offending token.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset);
  std::size_t offset() const { return offset_; }
  const std::string& detail() const { return detail_; }

 private:
  std::string detail_;
  std::size_t offset_;
};

/// Parse an expression over x1..xn, y1..yn.
///
///   expr     := term (("+"|"-") term)*
///   term     := factor (("*"|"/") factor)*
///   factor   := base ("^" exponent)?
///   base     := number | var | func "(" expr ")" | "(" expr ")" | "-" base
///   var      := ("x"|"y") digit+
///   func     := "sqrt" | "exp" | "log" | "sin" | "cos"
///   exponent := signed number
ExprPtr parse_expression(std::string_view text, int dim);

}  // namespace finsler::metric
