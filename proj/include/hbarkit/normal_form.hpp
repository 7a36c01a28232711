#pragma once

#include <map>
#include <string>
#include <vector>

#include "hbarkit/operator_jet.hpp"

namespace hbarkit {

/// Polynomial in u with hbar-scalar coefficients (u stands for a^+ a).
class UPoly {
 public:
  using Terms = std::map<unsigned, HbarScalar>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  HbarScalar coefficient(unsigned power) const;
  void add_term(unsigned power, const HbarScalar& c);
  bool is_hbar_nonnegative() const;

  UPoly& operator+=(const UPoly& o);
  friend UPoly operator*(const UPoly& p, const UPoly& q);
  friend bool operator==(const UPoly& p, const UPoly& q) { return p.terms_ == q.terms_; }

  /// Value at u = c.
  HbarScalar evaluate(const HbarScalar& u) const;
  /// psi(a^+ a) as a normal-ordered operator.
  QOperator to_operator() const;
  std::string to_string() const;

 private:
  Terms terms_;
};

/// U_0 = 1, U_k = H U_{k-1} / k: the jet solving dU/dt = H U, U(0) = 1.
/// Requires H to be hbar-nonnegative.
OperatorJet evolve(const QOperator& h, unsigned order);

/// U F U^{-1} truncated at `order`; U_0 must be 1.
OperatorJet conjugate(const QOperator& f, const OperatorJet& u, unsigned order);
OperatorJet conjugate(const OperatorJet& f, const OperatorJet& u);

/// Rewrites a diagonal operator through (a^+)^i a^i = u (u - hbar) ... (u - (i-1) hbar).
UPoly diagonal_to_u(const QOperator& diagonal);

struct NormalFormResult {
  std::vector<UPoly> psi;             // psi[k] multiplies t^k; psi[0] = u
  std::vector<QOperator> generators;  // generators[k-1] = G_k
  OperatorJet conjugated;             // exp(t^K L_K) ... exp(t L_1) applied to H
  OperatorJet residual;               // conjugated - psi(t, a^+ a)

  /// psi(t, u) at u = value, one coefficient per t-order.
  std::vector<HbarScalar> evaluate(const HbarScalar& value) const;
};

/// Removes off-diagonal terms of a^+a + tP order by order in t. At order k
/// the off-diagonal residual r (a^+)^i a^j is cancelled by
///   G_k = -r / (j - i) (a^+)^i a^j,  H -> exp(t^k ad_{G_k} / hbar) H,
/// and the diagonal remainder becomes the t^k coefficient of psi.
NormalFormResult quantum_birkhoff(const QOperator& perturbation, unsigned order);

/// How the off-diagonal monomials of one t-order are removed.
enum class Elimination {
  combined,    // a single generator per order
  ascending,   // one generator per monomial, in increasing (i, j)
  descending,  // one generator per monomial, in decreasing (i, j)
};

/// Birkhoff reduction of a full jet H_0 + t H_1 + ...; H_0 must equal a^+ a.
NormalFormResult quantum_birkhoff(const OperatorJet& hamiltonian, Elimination mode = Elimination::combined);

/// exp(t^step ad_G / hbar) applied to a jet, truncated (Lie series).
OperatorJet lie_transform(const QOperator& generator, unsigned step, const OperatorJet& h);

}  // namespace hbarkit
