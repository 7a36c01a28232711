#include "hbarkit/henon_heiles.hpp"

namespace hbarkit {

namespace henon_heiles {

const std::vector<std::string>& phase_variables() {
  static const std::vector<std::string> vars{"q1", "p1", "q2", "p2"};
  return vars;
}

namespace {

MultiPoly var(const std::vector<std::string>& vars, const std::string& name) {
  return MultiPoly::variable(vars, name);
}

MultiPoly num(const std::vector<std::string>& vars, long n, long d = 1) {
  return MultiPoly::constant(vars, make_rational(n, d));
}

}  // namespace

MultiPoly h1() {
  const auto& v = phase_variables();
  auto q1 = var(v, "q1"), p1 = var(v, "p1"), q2 = var(v, "q2"), p2 = var(v, "p2");
  return num(v, 1, 2) * (p1 * p1 + p2 * p2) - num(v, 2) * q2.pow(3) - q1 * q1 * q2;
}

MultiPoly h2() {
  const auto& v = phase_variables();
  auto q1 = var(v, "q1"), p1 = var(v, "p1"), q2 = var(v, "q2"), p2 = var(v, "p2");
  return q1.pow(4) + num(v, 4) * q1 * q1 * q2 * q2 + num(v, 4) * p1 * (p1 * q2 - p2 * q1);
}

MultiPoly lax_determinant() {
  const std::vector<std::string> v{"x", "q1", "p1", "q2", "p2"};
  auto x = var(v, "x"), q1 = var(v, "q1"), p1 = var(v, "p1"), q2 = var(v, "q2"), p2 = var(v, "p2");
  const MultiPoly l11 = -x * p2 + p1 * q1;
  const MultiPoly l12 = x * x + num(v, 2) * x * q2 - q1 * q1;
  const MultiPoly l21 = num(v, -1, 2) * x.pow(3) + q2 * x * x - x * (num(v, 2) * q2 * q2 + num(v, 1, 2) * q1 * q1) + p1 * p1;
  const MultiPoly l22 = x * p2 - p1 * q1;
  return l11 * l22 - l12 * l21;
}

UniPoly spectral_polynomial() {
  const std::vector<std::string> v{"l1", "l2", "x"};
  auto x = var(v, "x"), l1 = var(v, "l1"), l2 = var(v, "l2");
  return UniPoly::from_multi(num(v, 1, 2) * x.pow(5) - num(v, 2) * l1 * x * x - num(v, 1, 2) * l2 * x, "x");
}

}  // namespace henon_heiles

namespace {

unsigned reduced_product_multiplicity(const FactorCheck& check) {
  const auto& vars = check.candidates.front().variables();
  MultiPoly product = MultiPoly::constant(vars, 1);
  for (std::size_t i = 0; i < check.candidates.size(); ++i)
    if (check.factorization->exponents[i] > 0) product = product * check.candidates[i];
  return multiplicity_at_origin(product);
}

}  // namespace

HenonHeilesReport henon_heiles_suite() {
  using namespace henon_heiles;
  HenonHeilesReport r;
  const auto f = SymplecticPoly::consecutive(h1());
  const auto g = SymplecticPoly::consecutive(h2());
  r.bracket = poisson_bracket(f, g).poly;

  const std::vector<std::string> lax_vars{"x", "q1", "p1", "q2", "p2"};
  const MultiPoly x = MultiPoly::variable(lax_vars, "x");
  const MultiPoly expected = MultiPoly::constant(lax_vars, make_rational(1, 2)) * x.pow(5) -
                             MultiPoly::constant(lax_vars, 2) * h1().embedded(lax_vars) * x * x -
                             MultiPoly::constant(lax_vars, make_rational(1, 2)) * h2().embedded(lax_vars) * x;
  r.lax_residual = lax_determinant() - expected;

  r.discriminant = polynomial_discriminant(spectral_polynomial());
  r.raw_multiplicity = multiplicity_at_origin(r.discriminant);
  const std::vector<std::string> lam{"l1", "l2"};
  const MultiPoly l1 = MultiPoly::variable(lam, "l1"), l2 = MultiPoly::variable(lam, "l2");
  const MultiPoly c27 = MultiPoly::constant(lam, 27);
  r.stated.candidates = {l2, l2.pow(3) - c27 * l1.pow(4)};
  r.stated.factorization = trial_factorize(r.discriminant, r.stated.candidates);
  r.corrected.candidates = {l2, l2.pow(3) + c27 * l1.pow(4)};
  r.corrected.factorization = trial_factorize(r.discriminant, r.corrected.candidates);
  if (r.stated.factorization) {
    r.reduced_multiplicity = reduced_product_multiplicity(r.stated);
  } else if (r.corrected.factorization) {
    r.reduced_multiplicity = reduced_product_multiplicity(r.corrected);
  }
  r.betti = r.reduced_multiplicity;

  const auto& pv = phase_variables();
  auto sq = [&](const char* name) { return MultiPoly::variable(pv, name).pow(2); };
  r.torus_bracket = poisson_bracket(SymplecticPoly::consecutive(sq("q1") + sq("p1")),
                                    SymplecticPoly::consecutive(sq("q2") + sq("p2")))
                        .poly;
  r.torus_discriminant = l1 * l2;
  r.torus_multiplicity = multiplicity_at_origin(r.torus_discriminant);
  r.torus_betti = r.torus_multiplicity;
  return r;
}

}  // namespace hbarkit
