#pragma once

#include <vector>

#include "hbarkit/qoperator.hpp"

namespace hbarkit {

/// Truncated series U_0 + U_1 t + ... + U_K t^K with operator coefficients.
/// Every product is re-truncated at the jet's order.
class OperatorJet {
 public:
  explicit OperatorJet(unsigned order) : coeffs_(order + 1) {}
  OperatorJet(unsigned order, std::vector<QOperator> coefficients);
  static OperatorJet identity(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const QOperator& operator[](unsigned k) const { return coeffs_.at(k); }
  QOperator& operator[](unsigned k) { return coeffs_.at(k); }
  const std::vector<QOperator>& coefficients() const { return coeffs_; }
  bool is_zero() const;
  bool is_hbar_nonnegative() const;

  OperatorJet& operator+=(const OperatorJet& o);
  OperatorJet& operator-=(const OperatorJet& o);
  friend OperatorJet operator+(OperatorJet x, const OperatorJet& y) { return x += y; }
  friend OperatorJet operator-(OperatorJet x, const OperatorJet& y) { return x -= y; }
  friend bool operator==(const OperatorJet& x, const OperatorJet& y) { return x.coeffs_ == y.coeffs_; }

 private:
  std::vector<QOperator> coeffs_;
};

/// Truncated noncommutative product (orders must agree).
OperatorJet operator*(const OperatorJet& x, const OperatorJet& y);

/// Inverse of a jet with U_0 = 1: V_0 = 1, V_k = -sum_{r=1..k} U_r V_{k-r}.
OperatorJet inverse(const OperatorJet& u);

/// sum_{m <= K/step} (t^step X)^m / m!, no hbar restriction on X.
OperatorJet exponential(const QOperator& x, unsigned step, unsigned order);

}  // namespace hbarkit
