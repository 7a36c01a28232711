#include "hbarkit/random_ops.hpp"

namespace hbarkit {

unsigned RandomAlgebra::uniform(unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng_);
}

Rational RandomAlgebra::small_rational() {
  long num = 0;
  while (num == 0) num = std::uniform_int_distribution<long>(-4, 4)(rng_);
  return make_rational(num, std::uniform_int_distribution<long>(1, 3)(rng_));
}

QOperator RandomAlgebra::hbar_operator(unsigned max_degree, unsigned max_hbar, unsigned max_terms) {
  QOperator q;
  const unsigned n = uniform(1, max_terms);
  for (unsigned t = 0; t < n; ++t) {
    const unsigned d = uniform(0, max_degree);
    const unsigned i = uniform(0, d);
    q.add_term({i, d - i}, HbarScalar::monomial(small_rational(), static_cast<int>(uniform(0, max_hbar))));
  }
  return q;
}

MultiPoly RandomAlgebra::poly(const std::vector<std::string>& vars, unsigned max_degree, unsigned max_terms) {
  MultiPoly p(vars);
  const unsigned n = uniform(1, max_terms);
  for (unsigned t = 0; t < n; ++t) {
    Exponents e(vars.size(), 0);
    unsigned budget = uniform(0, max_degree);
    for (auto& x : e) {
      x = uniform(0, budget);
      budget -= x;
    }
    p.add_term(e, small_rational());
  }
  return p;
}

}  // namespace hbarkit
