#include <doctest.h>

#include "hbarkit/parser.hpp"
#include "hbarkit/qoperator.hpp"
#include "hbarkit/random_ops.hpp"

using namespace hbarkit;

namespace {

QOperator op(const char* text) { return parse_operator_expr(text); }
const HbarScalar h = HbarScalar::hbar();

}  // namespace

TEST_CASE("normal ordering examples") {
  const QOperator a = QOperator::a(), ad = QOperator::ad();
  CHECK(normal_order_product(a, ad) == QOperator::number() + QOperator(h));
  CHECK(normal_order_product(ad, a) == QOperator::number());
  CHECK(normal_order_product(power(a, 2), power(ad, 2)) ==
        QOperator::monomial(2, 2) + QOperator::monomial(1, 1, HbarScalar::monomial(4, 1)) +
            QOperator(HbarScalar::monomial(2, 2)));
  CHECK(power(QOperator::number(), 2) == QOperator::monomial(2, 2) + QOperator::monomial(1, 1, h));
  CHECK(power(a + ad, 2) == op("ad^2 + 2*ad*a + a^2 + h"));
  CHECK(power(a, 0) == QOperator(HbarScalar(1)));
}

TEST_CASE("a^3 (a^+)^2 expands with the Wick coefficients") {
  // m! C(3,m) C(2,m) hbar^m (a^+)^(2-m) a^(3-m), m = 0, 1, 2.
  const QOperator expected = QOperator::monomial(2, 3) + QOperator::monomial(1, 2, HbarScalar::monomial(6, 1)) +
                             QOperator::monomial(0, 1, HbarScalar::monomial(6, 2));
  CHECK(normal_order_product(QOperator::monomial(0, 3), QOperator::monomial(2, 0)) == expected);
}

TEST_CASE("scaled commutator with the number operator") {
  for (unsigned i = 0; i < 5; ++i)
    for (unsigned j = 0; j < 5; ++j) {
      const QOperator m = QOperator::monomial(i, j);
      const long shift = static_cast<long>(j) - static_cast<long>(i);
      CHECK(scaled_commutator(m, QOperator::number()) == m * HbarScalar(shift));
    }
  CHECK(scaled_commutator(QOperator::a(), QOperator::ad()) == QOperator(HbarScalar(1)));
}

TEST_CASE("product is associative and graded on random operators") {
  RandomAlgebra rng(42);
  for (int i = 0; i < 40; ++i) {
    const QOperator f = rng.hbar_operator(3), g = rng.hbar_operator(3), k = rng.hbar_operator(2);
    CHECK(normal_order_product(normal_order_product(f, g), k) == normal_order_product(f, normal_order_product(g, k)));
    CHECK(normal_order_product(f, g + k) == normal_order_product(f, g) + normal_order_product(f, k));
    // Weight i - j is additive: each contraction removes one a and one a^+.
    const QOperator fg = normal_order_product(f, g);
    for (const auto& [key, c] : fg.terms()) {
      bool found = false;
      for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
          if (static_cast<long>(kf.creation + kg.creation) - static_cast<long>(kf.annihilation + kg.annihilation) ==
              static_cast<long>(key.creation) - static_cast<long>(key.annihilation))
            found = true;
      CHECK(found);
    }
    CHECK(fg.is_hbar_nonnegative());
    CHECK(scaled_commutator(f, g).is_hbar_nonnegative());
  }
}

TEST_CASE("dagger is an involutive anti-automorphism") {
  RandomAlgebra rng(8);
  CHECK(dagger(QOperator::monomial(2, 1, HbarScalar::monomial(3, 1))) ==
        QOperator::monomial(1, 2, HbarScalar::monomial(3, 1)));
  for (int i = 0; i < 30; ++i) {
    const QOperator f = rng.hbar_operator(3), g = rng.hbar_operator(3);
    CHECK(dagger(dagger(f)) == f);
    CHECK(dagger(normal_order_product(f, g)) == normal_order_product(dagger(g), dagger(f)));
  }
}

TEST_CASE("ev pairing") {
  for (unsigned j = 0; j < 7; ++j) {
    const QOperator m = QOperator::monomial(j, 0);
    CHECK(ev_pairing(m, m) == HbarScalar::monomial(factorial(j), static_cast<int>(j)));
  }
  CHECK(ev_pairing(QOperator::ad(), QOperator::monomial(2, 0)).is_zero());
  RandomAlgebra rng(21);
  for (int i = 0; i < 30; ++i) {
    const QOperator f = rng.hbar_operator(3), g = rng.hbar_operator(3);
    CHECK(ev_pairing(f, g) == ev_pairing(g, f));
  }
}

TEST_CASE("symbols") {
  const QOperator f = op("ad^2*a + 3*h*ad + h^2");
  const SymbolPoly s = total_symbol(f);
  CHECK(s.coefficient(2, 1) == HbarScalar(1));
  CHECK(s.coefficient(1, 0) == HbarScalar::monomial(3, 1));
  CHECK(s.coefficient(0, 0) == HbarScalar::monomial(1, 2));

  const MultiPoly p = principal_symbol(f);
  CHECK(p == MultiPoly::monomial({"x", "y"}, {2, 1}));

  const BorelSymbol b = borel_symbol(f);
  CHECK(b.constant_part == p);
  CHECK(b.transform.coefficient(1, 0) == HbarScalar(3));
  CHECK(b.transform.coefficient(0, 0) == h);
  CHECK(b.transform.coefficient(2, 1).is_zero());

  CHECK_THROWS_WITH_AS(principal_symbol(QOperator::monomial(1, 0, HbarScalar::hbar(-1))),
                       "not in Q: negative power of hbar", ComputationError);
}

TEST_CASE("principal symbol intertwines the commutator and the Poisson bracket") {
  RandomAlgebra rng(77);
  const std::vector<std::string> xy{"x", "y"};
  for (int i = 0; i < 30; ++i) {
    const QOperator f = rng.hbar_operator(3), g = rng.hbar_operator(3);
    const MultiPoly pf = principal_symbol(f), pg = principal_symbol(g);
    const MultiPoly bracket = pf.derivative(1) * pg.derivative(0) - pf.derivative(0) * pg.derivative(1);
    CHECK(principal_symbol(scaled_commutator(f, g)) == bracket);
  }
}

TEST_CASE("rendering is parseable") {
  RandomAlgebra rng(1);
  for (int i = 0; i < 40; ++i) {
    const QOperator f = rng.hbar_operator(4);
    CHECK(parse_operator_expr(f.to_string()) == f);
  }
  CHECK(QOperator().to_string() == "0");
}
