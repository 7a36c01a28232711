#pragma once

#include <map>
#include <optional>
#include <string>

#include "hbarkit/rational.hpp"

namespace hbarkit {

/// Laurent polynomial in hbar over the rationals. Zero coefficients are never
/// stored, so the empty map is zero.
class HbarScalar {
 public:
  using Terms = std::map<int, Rational>;

  HbarScalar() = default;
  HbarScalar(const Rational& c) { add_term(0, c); }  // NOLINT: implicit scalar
  HbarScalar(long c) : HbarScalar(Rational(c)) {}     // NOLINT
  static HbarScalar monomial(const Rational& c, int exponent);
  static HbarScalar hbar(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int exponent) const;
  /// All exponents >= 0 (zero counts as nonnegative).
  bool is_nonnegative() const;
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;
  /// Single term c*hbar^k?
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(int exponent, const Rational& c);

  HbarScalar shifted(int by) const;  // multiply by hbar^by
  HbarScalar truncated_below(int order) const;  // drop exponents >= order
  /// Exact division by a single-term scalar; throws otherwise.
  HbarScalar divided_by(const HbarScalar& monomial_divisor) const;

  HbarScalar& operator+=(const HbarScalar& o);
  HbarScalar& operator-=(const HbarScalar& o);
  HbarScalar& operator*=(const HbarScalar& o);
  HbarScalar& operator*=(const Rational& c);

  friend HbarScalar operator+(HbarScalar a, const HbarScalar& b) { return a += b; }
  friend HbarScalar operator-(HbarScalar a, const HbarScalar& b) { return a -= b; }
  friend HbarScalar operator*(HbarScalar a, const HbarScalar& b) { return a *= b; }
  friend HbarScalar operator*(HbarScalar a, const Rational& c) { return a *= c; }
  friend HbarScalar operator*(const Rational& c, HbarScalar a) { return a *= c; }
  HbarScalar operator-() const;

  friend bool operator==(const HbarScalar& a, const HbarScalar& b) { return a.terms_ == b.terms_; }

  /// Renders as e.g. "3/2*h^2 - h + 1" (highest power first).
  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace hbarkit
