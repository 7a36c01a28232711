#include <doctest.h>

#include "hbarkit/normal_form.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/perturbation.hpp"
#include "hbarkit/random_ops.hpp"

using namespace hbarkit;

namespace {

const HbarScalar h = HbarScalar::hbar();

OperatorJet hamiltonian(const QOperator& p, unsigned order) {
  OperatorJet jet(order);
  jet[0] = QOperator::number();
  if (order >= 1) jet[1] = p;
  return jet;
}

UPoly upoly(std::initializer_list<std::pair<unsigned, HbarScalar>> terms) {
  UPoly p;
  for (const auto& [k, c] : terms) p.add_term(k, c);
  return p;
}

}  // namespace

TEST_CASE("evolution jet") {
  const OperatorJet u = evolve(QOperator::number(), 2);
  CHECK(u[0] == QOperator(HbarScalar(1)));
  CHECK(u[1] == QOperator::number());
  CHECK(u[2] == (QOperator::monomial(2, 2) + QOperator::monomial(1, 1, h)) * HbarScalar(make_rational(1, 2)));
  CHECK_THROWS_AS(evolve(QOperator::monomial(1, 0, HbarScalar::hbar(-1)), 2), ComputationError);
}

TEST_CASE("conjugation") {
  const unsigned order = 4;
  const QOperator g = (QOperator::ad() - QOperator::a()) * HbarScalar::hbar(-1);
  const OperatorJet u = exponential(g, 1, order);
  const OperatorJet shifted = conjugate(QOperator::a(), u, order);
  CHECK(shifted[0] == QOperator::a());
  CHECK(shifted[1] == QOperator(HbarScalar(-1)));
  for (unsigned k = 2; k <= order; ++k) CHECK(shifted[k].is_zero());

  CHECK(u * inverse(u) == OperatorJet::identity(order));
  CHECK(inverse(u) * u == OperatorJet::identity(order));

  RandomAlgebra rng(51);
  const QOperator f = rng.hbar_operator(3);
  const OperatorJet fixed = conjugate(f, OperatorJet::identity(3), 3);
  CHECK(fixed[0] == f);
  for (unsigned k = 1; k <= 3; ++k) CHECK(fixed[k].is_zero());

  OperatorJet nonunit(2);
  nonunit[0] = QOperator::a();
  CHECK_THROWS_WITH_AS(inverse(nonunit), "non-unit jet", ComputationError);
}

TEST_CASE("Lie series equals explicit conjugation") {
  RandomAlgebra rng(52);
  for (int i = 0; i < 10; ++i) {
    const QOperator g = rng.hbar_operator(3);
    const OperatorJet hj = hamiltonian(rng.hbar_operator(3), 3);
    const OperatorJet u = exponential(g * HbarScalar::hbar(-1), 1, 3);
    CHECK(lie_transform(g, 1, hj) == conjugate(hj, u));
    const OperatorJet u2 = exponential(g * HbarScalar::hbar(-1), 2, 3);
    CHECK(lie_transform(g, 2, hj) == conjugate(hj, u2));
  }
}

TEST_CASE("diagonal operators in the number variable") {
  CHECK(diagonal_to_u(QOperator::monomial(2, 2)) == upoly({{2, HbarScalar(1)}, {1, HbarScalar(-1) * h}}));
  CHECK(diagonal_to_u(QOperator::monomial(3, 3)) ==
        upoly({{3, HbarScalar(1)}, {2, HbarScalar::monomial(-3, 1)}, {1, HbarScalar::monomial(2, 2)}}));
  CHECK(diagonal_to_u(QOperator(h)) == upoly({{0, h}}));
  CHECK_THROWS_AS(diagonal_to_u(QOperator::a()), ComputationError);
  RandomAlgebra rng(53);
  for (int i = 0; i < 10; ++i) {
    QOperator d;
    for (unsigned k = 0; k < 4; ++k) d.add_term({k, k}, HbarScalar::monomial(rng.small_rational(), rng.uniform(0, 2)));
    CHECK(diagonal_to_u(d).to_operator() == d);
  }
}

TEST_CASE("Birkhoff normal form of a shifted oscillator") {
  const NormalFormResult r = quantum_birkhoff(parse_operator_expr("a+ad"), 3);
  REQUIRE(r.psi.size() == 4);
  CHECK(r.psi[0] == upoly({{1, HbarScalar(1)}}));
  CHECK(r.psi[1].is_zero());
  CHECK(r.psi[2] == upoly({{0, HbarScalar(-1)}}));
  CHECK(r.psi[3].is_zero());
  CHECK(r.residual.is_zero());
}

TEST_CASE("Birkhoff normal form of the quartic oscillator") {
  const NormalFormResult r = quantum_birkhoff(parse_operator_expr("(a+ad)^4"), 2);
  CHECK(r.psi[1] == upoly({{2, HbarScalar(6)}, {1, HbarScalar::monomial(6, 1)}, {0, HbarScalar::monomial(3, 2)}}));
  CHECK(r.residual.is_zero());
  CHECK(r.evaluate(HbarScalar(0))[1] == HbarScalar::monomial(3, 2));
}

TEST_CASE("zero perturbation and unsupported input") {
  const NormalFormResult r = quantum_birkhoff(QOperator(), 3);
  for (unsigned k = 1; k <= 3; ++k) CHECK(r.psi[k].is_zero());
  OperatorJet bad(2);
  bad[0] = QOperator::monomial(2, 2);
  CHECK_THROWS_WITH_AS(quantum_birkhoff(bad), "unsupported quadratic part", ComputationError);
}

TEST_CASE("random Birkhoff reductions") {
  RandomAlgebra rng(54);
  for (int i = 0; i < 12; ++i) {
    const QOperator p = rng.hbar_operator(3, 1);
    const unsigned order = 3;
    const NormalFormResult combined = quantum_birkhoff(p, order);
    CHECK(combined.residual.is_zero());
    for (const auto& psi : combined.psi) CHECK(psi.is_hbar_nonnegative());
    for (unsigned k = 0; k <= order; ++k) CHECK(combined.conjugated[k].is_diagonal());

    const OperatorJet hj = hamiltonian(p, order);
    CHECK(quantum_birkhoff(hj, Elimination::ascending).psi == combined.psi);
    CHECK(quantum_birkhoff(hj, Elimination::descending).psi == combined.psi);

    // psi(t, n hbar) is the eigenvalue jet at level n.
    for (unsigned n = 0; n <= 2; ++n) {
      const EigenJet jet = rs_expand(p, n, order);
      CHECK(combined.evaluate(HbarScalar::monomial(n, 1)) == jet.energy);
    }
  }
}

TEST_CASE("u-polynomial rendering") {
  CHECK(upoly({{2, HbarScalar(6)}, {0, HbarScalar::monomial(3, 2)}}).to_string() == "6*u^2 + 3*h^2");
  CHECK(upoly({{1, HbarScalar(1)}, {0, -h}}).to_string() == "u - h");
  CHECK(upoly({{2, HbarScalar(-1)}}).to_string() == "-u^2");
}
