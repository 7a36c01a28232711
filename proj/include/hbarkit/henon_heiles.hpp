#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbarkit/classical.hpp"

namespace hbarkit {

/// Built-in data of the integrable Henon-Heiles pair on C^4 with canonical
/// pairs (q1, p1), (q2, p2):
///   H1 = (p1^2 + p2^2)/2 - 2 q2^3 - q1^2 q2
///   H2 = q1^4 + 4 q1^2 q2^2 + 4 p1 (p1 q2 - p2 q1)
namespace henon_heiles {
const std::vector<std::string>& phase_variables();  // q1, p1, q2, p2
MultiPoly h1();
MultiPoly h2();
/// det of the Lax matrix, over (x, q1, p1, q2, p2).
MultiPoly lax_determinant();
/// x^5/2 - 2 l1 x^2 - l2 x / 2 as a polynomial in x over (l1, l2).
UniPoly spectral_polynomial();
}  // namespace henon_heiles

struct FactorCheck {
  std::vector<MultiPoly> candidates;
  std::optional<Factorization> factorization;
};

struct HenonHeilesReport {
  MultiPoly bracket;          // {H1, H2}
  MultiPoly lax_residual;     // det L - (x^5/2 - 2 H1 x^2 - H2 x / 2)
  MultiPoly discriminant;     // raw resultant of the spectral polynomial
  FactorCheck stated;         // against {l2, l2^3 - 27 l1^4}
  FactorCheck corrected;      // against {l2, l2^3 + 27 l1^4}
  std::optional<unsigned> reduced_multiplicity;  // of the certified reduced factor product
  unsigned raw_multiplicity = 0;                 // of the raw resultant
  std::optional<unsigned> betti;                 // = reduced multiplicity

  MultiPoly torus_bracket;        // {q1^2 + p1^2, q2^2 + p2^2}
  MultiPoly torus_discriminant;   // l1 l2
  unsigned torus_multiplicity = 0;
  unsigned torus_betti = 0;

  bool commuting() const { return bracket.is_zero(); }
  bool lax_identity() const { return lax_residual.is_zero(); }
};

HenonHeilesReport henon_heiles_suite();

}  // namespace hbarkit
