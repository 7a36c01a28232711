#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hbarkit/multi_poly.hpp"
#include "hbarkit/qoperator.hpp"

namespace hbarkit {

/// Lexical or syntax error; `offset` is the byte position in the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, const std::string& message);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Expression tree. Products keep the written order; exponents are natural
/// numbers. Identifiers (a, ad, h, t, variables) are resolved at evaluation.
struct ExprAst {
  enum class Kind { sum, difference, product, power, negate, identifier, rational };

  Kind kind = Kind::rational;
  std::size_t offset = 0;
  std::string name;       // identifier
  Rational value;         // rational literal
  unsigned exponent = 0;  // power
  std::vector<ExprAst> children;
};

/// Largest accepted exponent; keeps hostile input from stalling evaluation.
constexpr unsigned kMaxExponent = 64;

/// Grammar:
///   expr   := term (("+" | "-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | base ("^" nat)?
///   base   := ident | rational | "(" expr ")"
///   rational := int ("/" nat)?
/// so "^" binds tighter than unary minus, which binds tighter than "*".
ExprAst parse_expr(std::string_view text);

/// Operator atoms: a, ad, h. The result is normal ordered.
QOperator parse_operator_expr(std::string_view text);
QOperator evaluate_operator(const ExprAst& ast);

/// Commutative polynomial in the declared variables.
MultiPoly parse_commutative_poly(std::string_view text, const std::vector<std::string>& variables);
MultiPoly evaluate_commutative(const ExprAst& ast, const std::vector<std::string>& variables);

/// Splits "x,y , z" into names.
std::vector<std::string> split_names(std::string_view text);

}  // namespace hbarkit
