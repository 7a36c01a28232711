#pragma once

#include <vector>

#include "hbarkit/bargmann.hpp"
#include "hbarkit/operator_jet.hpp"

namespace hbarkit {

/// Eigenvalue and eigenvector jets E_0..E_K, psi_0..psi_K at one level n.
/// Normalization: [z^n] psi_k = delta_k0.
struct EigenJet {
  unsigned level = 0;
  unsigned order = 0;
  std::vector<HbarScalar> energy;
  std::vector<BargmannVector> vector;

  bool is_hbar_nonnegative() const;
  friend bool operator==(const EigenJet&, const EigenJet&) = default;
};

/// Rayleigh-Schroedinger expansion of a^+a + tP at level n to order K.
EigenJet rs_expand(const QOperator& perturbation, unsigned level, unsigned order);

/// Same recursion for a general jet H_0 + t H_1 + ...; H_0 must be diagonal
/// with hbar-monomial level gaps around `level`.
EigenJet rs_expand(const OperatorJet& hamiltonian, unsigned level);

/// t -> hbar t: multiplies order-k coefficients by hbar^k.
EigenJet relative_substitute(const EigenJet& jet);

/// Independent oracle: dense matrix perturbation theory on z^0..z^D,
/// D = n + K * max_shift(P), via Brillouin-Wigner fixed-point iteration of
/// the energy series.
EigenJet matrix_oracle(const QOperator& perturbation, unsigned level, unsigned order);

/// Coefficients of (H - E) psi for H = a^+a + tP at t-orders 0..K.
std::vector<BargmannVector> eigen_defect(const QOperator& perturbation, const EigenJet& jet);

struct BorelSequence {
  std::vector<Rational> transform;  // b_k = c_{k+1} / k!
  Rational constant;                // c_0
};

/// Borel transform of a coefficient stream; needs at least two entries.
BorelSequence borel_sequence(const std::vector<Rational>& coefficients);

struct GevreyFit {
  double order = 0;     // s in log|c_k| ~ alpha + beta k + s (k log k - k)
  double residual = 0;  // RMS of the fit residuals
};

/// Least-squares Gevrey order estimate (floating point).
GevreyFit gevrey_estimate(const std::vector<Rational>& coefficients);

}  // namespace hbarkit
