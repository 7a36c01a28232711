#pragma once

#include <optional>
#include <vector>

#include "hbarkit/multi_poly.hpp"

namespace hbarkit {

struct Factorization {
  Rational unit;
  std::vector<unsigned> exponents;
};

/// Tries to write target = unit * prod candidates[i]^exponents[i] by repeated
/// exact division. The answer is re-verified by multiplication.
std::optional<Factorization> trial_factorize(const MultiPoly& target, const std::vector<MultiPoly>& candidates);

/// Dimension of span{monomials of degree < bound} modulo the span of the
/// generators truncated below `bound`. Generators must share one variable list.
unsigned span_codimension(const std::vector<MultiPoly>& generators, unsigned degree_bound);

/// Same, with an explicit variable count (needed when `generators` is empty).
unsigned span_codimension(const std::vector<MultiPoly>& generators, unsigned degree_bound, std::size_t nvars);

/// Rank of a rational matrix by Gaussian elimination.
std::size_t rank(std::vector<std::vector<Rational>> rows);

}  // namespace hbarkit
