#pragma once

#include <random>

#include "hbarkit/multi_poly.hpp"
#include "hbarkit/qoperator.hpp"

namespace hbarkit {

/// Seeded generators for the property suites. Same seed, same values.
class RandomAlgebra {
 public:
  explicit RandomAlgebra(std::uint64_t seed) : rng_(seed) {}

  Rational small_rational();
  /// 1..max_terms terms (a^+)^i a^j hbar^k with i + j <= max_degree, k <= max_hbar.
  QOperator hbar_operator(unsigned max_degree, unsigned max_hbar = 2, unsigned max_terms = 4);
  /// Random polynomial with total degree <= max_degree.
  MultiPoly poly(const std::vector<std::string>& vars, unsigned max_degree, unsigned max_terms = 4);
  unsigned uniform(unsigned lo, unsigned hi);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hbarkit
