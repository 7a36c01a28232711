#pragma once

#include <map>
#include <string>

#include "hbarkit/qoperator.hpp"

namespace hbarkit {

/// Element sum_m v_m z^m of H = Q / Q a, identified with polynomials in z.
class BargmannVector {
 public:
  using Terms = std::map<unsigned, HbarScalar>;

  BargmannVector() = default;
  static BargmannVector basis(unsigned m, const HbarScalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coefficient(unsigned m) const;
  void add_term(unsigned m, const HbarScalar& c);
  bool is_hbar_nonnegative() const;

  BargmannVector& operator+=(const BargmannVector& o);
  BargmannVector& operator-=(const BargmannVector& o);
  BargmannVector& operator*=(const HbarScalar& c);
  friend BargmannVector operator+(BargmannVector v, const BargmannVector& w) { return v += w; }
  friend BargmannVector operator-(BargmannVector v, const BargmannVector& w) { return v -= w; }
  friend BargmannVector operator*(BargmannVector v, const HbarScalar& c) { return v *= c; }
  friend BargmannVector operator*(const HbarScalar& c, BargmannVector v) { return v *= c; }
  friend bool operator==(const BargmannVector& v, const BargmannVector& w) { return v.terms_ == w.terms_; }

  std::string to_string() const;

 private:
  Terms terms_;
};

/// rho(a) = hbar d/dz, rho(a^+) = z:
///   (a^+)^i a^j z^m = hbar^j m (m-1) ... (m-j+1) z^(m-j+i).
BargmannVector apply_operator(const QOperator& f, const BargmannVector& v);

/// <z^i, z^j> = delta_ij j! hbar^j, extended bilinearly.
HbarScalar inner_product(const BargmannVector& v, const BargmannVector& w);

/// Formal hbar-series truncated strictly below `order`.
struct TraceSeries {
  HbarScalar value;
  unsigned order = 0;
  friend bool operator==(const TraceSeries&, const TraceSeries&) = default;
};

/// sum_n <z^n, F z^n>, exact for every hbar power below N.
TraceSeries trace_series(const QOperator& f, unsigned order);

struct BorelTrace {
  TraceSeries transform;
  Rational constant;  // dropped hbar^0 coefficient
};

/// hbar^k -> hbar^(k-1) / (k-1)! for k >= 1.
BorelTrace borel_hbar(const TraceSeries& s);

}  // namespace hbarkit
