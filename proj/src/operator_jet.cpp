#include "hbarkit/operator_jet.hpp"

#include <algorithm>

namespace hbarkit {

OperatorJet::OperatorJet(unsigned order, std::vector<QOperator> coefficients) : coeffs_(std::move(coefficients)) {
  coeffs_.resize(order + 1);
}

OperatorJet OperatorJet::identity(unsigned order) {
  OperatorJet u(order);
  u[0] = QOperator(HbarScalar(1));
  return u;
}

bool OperatorJet::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QOperator& q) { return q.is_zero(); });
}

bool OperatorJet::is_hbar_nonnegative() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const QOperator& q) { return q.is_hbar_nonnegative(); });
}

OperatorJet& OperatorJet::operator+=(const OperatorJet& o) {
  if (o.order() != order()) throw ComputationError("jets of different orders");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

OperatorJet& OperatorJet::operator-=(const OperatorJet& o) {
  if (o.order() != order()) throw ComputationError("jets of different orders");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

OperatorJet operator*(const OperatorJet& x, const OperatorJet& y) {
  if (x.order() != y.order()) throw ComputationError("jets of different orders");
  const unsigned order = x.order();
  OperatorJet out(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (x[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= order; ++j) {
      if (y[j].is_zero()) continue;
      out[i + j] += normal_order_product(x[i], y[j]);
    }
  }
  return out;
}

OperatorJet inverse(const OperatorJet& u) {
  if (!(u[0] == QOperator(HbarScalar(1)))) throw ComputationError("non-unit jet");
  OperatorJet v = OperatorJet::identity(u.order());
  for (unsigned k = 1; k <= u.order(); ++k) {
    QOperator acc;
    for (unsigned r = 1; r <= k; ++r) acc += normal_order_product(u[r], v[k - r]);
    v[k] = -acc;
  }
  return v;
}

OperatorJet exponential(const QOperator& x, unsigned step, unsigned order) {
  if (step == 0) throw ComputationError("exponential step must be positive");
  OperatorJet out = OperatorJet::identity(order);
  QOperator term(HbarScalar(1));
  for (unsigned m = 1; m * step <= order; ++m) {
    term = normal_order_product(term, x) * HbarScalar(make_rational(1, static_cast<long>(m)));
    out[m * step] += term;
  }
  return out;
}

}  // namespace hbarkit
