#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hbarkit/rational.hpp"

namespace hbarkit {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lexicographic on the
/// exponent vector with the first variable most significant.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over the rationals in a fixed, ordered list of named
/// variables. Terms are kept in graded-lex order; zero coefficients are
/// never stored. Binary operations require identical variable lists.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Rational, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}
  static MultiPoly constant(std::vector<std::string> variables, const Rational& c);
  static MultiPoly variable(std::vector<std::string> variables, const std::string& name);
  static MultiPoly monomial(std::vector<std::string> variables, Exponents e, const Rational& c = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_index(const std::string& name) const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  /// Highest / lowest total degree among stored terms; throws on zero.
  unsigned degree() const;
  unsigned min_degree() const;
  /// Degree in one variable (0 for the zero polynomial).
  unsigned degree_in(std::size_t var) const;
  /// Leading term in graded-lex order; throws on zero.
  std::pair<Exponents, Rational> leading_term() const;

  MultiPoly derivative(std::size_t var) const;
  /// Drops every term of total degree >= bound.
  MultiPoly truncated(unsigned bound) const;
  /// Re-expresses over a superset of the variables (by name).
  MultiPoly embedded(const std::vector<std::string>& variables) const;
  /// Substitutes a polynomial (over the target variable list) for each variable.
  MultiPoly substituted(const std::vector<MultiPoly>& images) const;
  MultiPoly pow(unsigned n) const;

  /// Exact quotient self / divisor, or nullopt when divisor does not divide.
  std::optional<MultiPoly> exact_divide(const MultiPoly& divisor) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Renders with the grammar accepted by the expression parser.
  std::string to_string() const;

 private:
  void require_same_variables(const MultiPoly& o) const;

  std::vector<std::string> vars_;
  Terms terms_;
};

/// All exponent vectors in `nvars` variables with total degree < bound, in
/// graded-lex order.
std::vector<Exponents> monomials_below(std::size_t nvars, unsigned bound);

}  // namespace hbarkit
