#include <doctest.h>

#include <cmath>

#include "hbarkit/parser.hpp"
#include "hbarkit/perturbation.hpp"
#include "hbarkit/random_ops.hpp"

using namespace hbarkit;

namespace {

const HbarScalar h = HbarScalar::hbar();
HbarScalar hm(long c, int k) { return HbarScalar::monomial(c, k); }

OperatorJet hamiltonian(const QOperator& p, unsigned order) {
  OperatorJet jet(order);
  jet[0] = QOperator::number();
  if (order >= 1) jet[1] = p;
  return jet;
}

std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("quartic oscillator energies") {
  // Reference values from second- and third-order sums over the
  // Fock basis, computed independently in a computer algebra system.
  const QOperator p = parse_operator_expr("(a+ad)^4");
  const EigenJet ground = rs_expand(p, 0, 3);
  CHECK(ground.energy[0].is_zero());
  CHECK(ground.energy[1] == hm(3, 2));
  CHECK(ground.energy[2] == hm(-42, 3));
  CHECK(ground.energy[3] == hm(1332, 4));

  const EigenJet first = rs_expand(p, 1, 2);
  CHECK(first.energy[0] == h);
  CHECK(first.energy[1] == hm(15, 2));
  CHECK(first.energy[2] == hm(-330, 3));

  CHECK(rs_expand(p, 2, 1).energy[1] == hm(39, 2));
}

TEST_CASE("linear perturbation") {
  const EigenJet jet = rs_expand(parse_operator_expr("a+ad"), 0, 4);
  CHECK(jet.energy[1].is_zero());
  CHECK(jet.energy[2] == HbarScalar(-1));
  CHECK(jet.energy[3].is_zero());
  CHECK(jet.energy[4].is_zero());
  CHECK(jet.vector[0] == BargmannVector::basis(0));
  CHECK(jet.vector[1].coefficient(1) == HbarScalar::monomial(-1, -1));
  CHECK_FALSE(jet.is_hbar_nonnegative());

  const EigenJet rel = relative_substitute(jet);
  CHECK(rel.vector[1] == BargmannVector::basis(1, HbarScalar(-1)));
  CHECK(rel.energy[2] == hm(-1, 2));
  CHECK(rel.is_hbar_nonnegative());
}

TEST_CASE("normalization and the defect") {
  RandomAlgebra rng(31);
  for (int i = 0; i < 15; ++i) {
    const QOperator p = rng.hbar_operator(4, 1);
    const unsigned n = rng.uniform(0, 3);
    const EigenJet jet = rs_expand(p, n, 3);
    CHECK(jet.vector[0] == BargmannVector::basis(n));
    for (unsigned k = 1; k <= 3; ++k) CHECK(jet.vector[k].coefficient(n).is_zero());
    for (const auto& d : eigen_defect(p, jet)) CHECK(d.is_zero());
  }
}

TEST_CASE("recursion agrees with the matrix oracle") {
  RandomAlgebra rng(32);
  for (int i = 0; i < 15; ++i) {
    const QOperator p = rng.hbar_operator(4, 1);
    const unsigned n = rng.uniform(0, 2);
    CHECK(rs_expand(p, n, 3) == matrix_oracle(p, n, 3));
  }
}

TEST_CASE("first order on a diagonal perturbation is the falling factorial") {
  for (unsigned i = 0; i <= 4; ++i)
    for (unsigned n = 0; n <= 6; ++n) {
      const EigenJet jet = rs_expand(QOperator::monomial(i, i), n, 1);
      CHECK(jet.energy[1] == HbarScalar::monomial(Rational(falling_factorial(n, i)), static_cast<int>(i)));
    }
}

TEST_CASE("the energy of H^2 is the square of the energy of H") {
  RandomAlgebra rng(33);
  for (int i = 0; i < 8; ++i) {
    const QOperator p = rng.hbar_operator(3, 1);
    const unsigned n = rng.uniform(0, 2);
    const unsigned order = 3;
    const OperatorJet hj = hamiltonian(p, order);
    const EigenJet base = rs_expand(hj, n);
    const EigenJet squared = rs_expand(hj * hj, n);
    CHECK(base == rs_expand(p, n, order));
    for (unsigned k = 0; k <= order; ++k) {
      HbarScalar expect;
      for (unsigned r = 0; r <= k; ++r) expect += base.energy[r] * base.energy[k - r];
      CHECK(squared.energy[k] == expect);
      CHECK(squared.vector[k] == base.vector[k]);
    }
  }
}

TEST_CASE("general jet errors") {
  OperatorJet bad(2);
  bad[0] = QOperator::ad() + QOperator::number();
  CHECK_THROWS_AS(rs_expand(bad, 0), ComputationError);
  OperatorJet degenerate(2);
  degenerate[0] = QOperator::monomial(2, 2);  // levels 0 and 1 both sit at 0
  CHECK_NOTHROW(rs_expand(degenerate, 0));    // nothing couples them yet
  degenerate[1] = QOperator::ad();
  CHECK_THROWS_AS(rs_expand(degenerate, 0), ComputationError);
}

TEST_CASE("Borel transform of a sequence") {
  const BorelSequence b = borel_sequence(rationals({0, 0, 1, 4, 18, 96}));
  CHECK(b.constant == 0);
  CHECK(b.transform == rationals({0, 1, 2, 3, 4}));
  const BorelSequence c = borel_sequence(rationals({5, 1, 1, 2}));
  CHECK(c.constant == 5);
  CHECK(c.transform == rationals({1, 1, 1}));
  CHECK_THROWS_AS(borel_sequence(rationals({1})), ComputationError);
}

TEST_CASE("Gevrey order estimates") {
  std::vector<Rational> fact, geo, inv;
  for (unsigned k = 0; k < 20; ++k) {
    fact.emplace_back(factorial(k));
    geo.emplace_back(Integer(1) << k);
    inv.emplace_back(Rational(1) / Rational(factorial(k)));
  }
  const GevreyFit f = gevrey_estimate(fact);
  const GevreyFit g = gevrey_estimate(geo);
  const GevreyFit i = gevrey_estimate(inv);
  CHECK(f.order == doctest::Approx(1.0).epsilon(0.15));
  CHECK(std::abs(g.order) < 0.1);
  CHECK(i.order == doctest::Approx(-1.0).epsilon(0.15));
  CHECK(f.order > g.order);
  CHECK(g.order > i.order);
  CHECK_THROWS_WITH_AS(gevrey_estimate(rationals({1, 2, 3})), "insufficient data", ComputationError);
  CHECK_THROWS_AS(gevrey_estimate(rationals({0, 0, 0, 0, 0, 0, 0, 1, 1})), ComputationError);
}
