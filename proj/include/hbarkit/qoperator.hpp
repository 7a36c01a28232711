#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>

#include "hbarkit/hbar_scalar.hpp"
#include "hbarkit/multi_poly.hpp"

namespace hbarkit {

/// Exponent pair (i, j) of the normal-ordered monomial (a^+)^i a^j.
struct Ladder {
  unsigned creation = 0;
  unsigned annihilation = 0;
  friend auto operator<=>(const Ladder&, const Ladder&) = default;
};

/// Element of the polynomial Heisenberg algebra [a, a^+] = hbar, stored in
/// normal order: sum of c_ij(hbar) (a^+)^i a^j. Coefficients are Laurent in
/// hbar so that intermediate jets may carry 1/hbar.
class QOperator {
 public:
  using Terms = std::map<Ladder, HbarScalar>;

  QOperator() = default;
  QOperator(const HbarScalar& c) { add_term({0, 0}, c); }  // NOLINT: scalars embed
  static QOperator a() { return monomial(0, 1); }
  static QOperator ad() { return monomial(1, 0); }
  static QOperator number() { return monomial(1, 1); }  // a^+ a
  static QOperator monomial(unsigned creation, unsigned annihilation, const HbarScalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coefficient(unsigned creation, unsigned annihilation) const;
  void add_term(Ladder key, const HbarScalar& c);

  bool is_hbar_nonnegative() const;
  bool is_diagonal() const;
  /// Largest i + j over stored terms (0 for zero).
  unsigned degree() const;
  /// Largest |i - j| over stored terms.
  unsigned max_shift() const;
  /// Largest annihilation exponent j.
  unsigned max_annihilation() const;

  QOperator& operator+=(const QOperator& o);
  QOperator& operator-=(const QOperator& o);
  QOperator& operator*=(const HbarScalar& c);
  friend QOperator operator+(QOperator x, const QOperator& y) { return x += y; }
  friend QOperator operator-(QOperator x, const QOperator& y) { return x -= y; }
  friend QOperator operator*(QOperator x, const HbarScalar& c) { return x *= c; }
  friend QOperator operator*(const HbarScalar& c, QOperator x) { return x *= c; }
  QOperator operator-() const;

  friend bool operator==(const QOperator& x, const QOperator& y) { return x.terms_ == y.terms_; }

  /// Renders in the input grammar, e.g. "ad^2*a + 3/2*h*ad*a + h".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// F * G rewritten in normal order with
///   a^j (a^+)^k = sum_m m! C(j,m) C(k,m) hbar^m (a^+)^(k-m) a^(j-m).
QOperator normal_order_product(const QOperator& f, const QOperator& g);
QOperator power(const QOperator& f, unsigned n);

/// (F G - G F) / hbar. With this order
///   scaled_commutator((a^+)^i a^j, a^+ a) = (j - i) (a^+)^i a^j.
QOperator scaled_commutator(const QOperator& f, const QOperator& g);

/// Conjugation: (a^+)^i a^j -> (a^+)^j a^i; hbar and rationals are real.
QOperator dagger(const QOperator& f);

/// Commutative image of a normal-ordered operator: a^+ -> x, a -> y.
/// Keys are (x-exponent, y-exponent).
class SymbolPoly {
 public:
  using Terms = std::map<Ladder, HbarScalar>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coefficient(unsigned xe, unsigned ye) const;
  void add_term(Ladder key, const HbarScalar& c);
  friend bool operator==(const SymbolPoly& p, const SymbolPoly& q) { return p.terms_ == q.terms_; }
  std::string to_string() const;

 private:
  Terms terms_;
};

SymbolPoly total_symbol(const QOperator& f);

/// Total symbol at hbar = 0, as a polynomial in (x, y). Throws when F carries
/// a negative power of hbar.
MultiPoly principal_symbol(const QOperator& f);

struct BorelSymbol {
  SymbolPoly transform;  // hbar^k -> hbar^(k-1) / (k-1)!, k >= 1
  MultiPoly constant_part;  // the dropped hbar^0 part
};

/// Borel transform of the total symbol in hbar.
BorelSymbol borel_symbol(const QOperator& f);

/// Constant term of the total symbol of dagger(F) * G.
HbarScalar ev_pairing(const QOperator& f, const QOperator& g);

}  // namespace hbarkit
