#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hbarkit/linear_algebra.hpp"
#include "hbarkit/multi_poly.hpp"
#include "hbarkit/uni_poly.hpp"

namespace hbarkit {

/// Polynomial on a symplectic space with canonical pairs (x_i, y_i) given as
/// variable indices into the polynomial's variable list.
struct SymplecticPoly {
  MultiPoly poly;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// Pairs consecutive variables: (v0, v1), (v2, v3), ...
  static SymplecticPoly consecutive(MultiPoly p);
};

/// {f, g} = sum_i (d_{y_i} f d_{x_i} g - d_{x_i} f d_{y_i} g). This sign makes
/// the principal symbol of the scaled commutator equal to the bracket of the
/// principal symbols, with a^+ -> x, a -> y; in particular {y, x} = 1.
SymplecticPoly poisson_bracket(const SymplecticPoly& f, const SymplecticPoly& g);
MultiPoly poisson_bracket_xy(const MultiPoly& f, const MultiPoly& g);

/// Sequence of truncated codimensions D_1, D_2, ... and the stabilized value.
struct StabilizedDimension {
  unsigned value = 0;
  unsigned stabilized_at = 0;  // first N with D_N = D_{N+1}
  std::vector<unsigned> sequence;
};

constexpr unsigned kDefaultJetCap = 24;

/// dim Q[x,y] / (d_x f, d_y f) at the origin, via jets of increasing order.
StabilizedDimension milnor_number(const MultiPoly& f, unsigned cap = kDefaultJetCap);

/// Codimension of f O + {O, f} (the n = 1 Lagrange complex H^1) via jets.
StabilizedDimension lagrange_h1_dim(const MultiPoly& f, unsigned cap = kDefaultJetCap);

/// Lowest total degree of a nonzero polynomial.
unsigned multiplicity_at_origin(const MultiPoly& p);

/// Raw resultant(p, dp/dx): no leading-coefficient division, no sign factor.
MultiPoly polynomial_discriminant(const UniPoly& p);

/// Components of a moment map; `integrable` is computed, never assumed.
struct MomentPair {
  std::vector<SymplecticPoly> components;
  bool pairwise_commuting() const;
};

}  // namespace hbarkit
