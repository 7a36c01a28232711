#pragma once

#include <string>
#include <vector>

#include "hbarkit/multi_poly.hpp"

namespace hbarkit {

/// Dense polynomial in one distinguished variable whose coefficients are
/// MultiPoly values over the remaining (parameter) variables.
/// coefficients()[k] multiplies var^k; the leading coefficient is nonzero.
class UniPoly {
 public:
  UniPoly(std::string var, std::vector<std::string> parameters, std::vector<MultiPoly> coefficients);

  /// Splits `p` with respect to `var`; the other variables become parameters.
  static UniPoly from_multi(const MultiPoly& p, const std::string& var);

  const std::string& variable() const { return var_; }
  const std::vector<std::string>& parameters() const { return params_; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Throws on the zero polynomial.
  unsigned degree() const;

  UniPoly derivative() const;
  MultiPoly to_multi() const;  // over parameters + variable

 private:
  std::string var_;
  std::vector<std::string> params_;
  std::vector<MultiPoly> coeffs_;
};

/// Determinant of the Sylvester matrix of p and q (p's rows first, coefficients
/// from leading to constant). With this convention
///   resultant(q, p) = (-1)^(deg p * deg q) * resultant(p, q).
/// The determinant is evaluated by fraction-free Bareiss elimination over the
/// parameter polynomial ring.
MultiPoly resultant(const UniPoly& p, const UniPoly& q);

/// Determinant of a square matrix of polynomials (Bareiss, exact division).
MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars);

}  // namespace hbarkit
