#include <doctest.h>

#include "hbarkit/bargmann.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/random_ops.hpp"

using namespace hbarkit;

namespace {

const HbarScalar h = HbarScalar::hbar();

BargmannVector random_vector(RandomAlgebra& rng) {
  BargmannVector v;
  for (unsigned m = 0; m < 5; ++m)
    if (rng.uniform(0, 1)) v.add_term(m, HbarScalar::monomial(rng.small_rational(), static_cast<int>(rng.uniform(0, 1))));
  return v;
}

}  // namespace

TEST_CASE("action on monomials") {
  CHECK(apply_operator(QOperator::monomial(0, 2), BargmannVector::basis(3)) ==
        BargmannVector::basis(1, HbarScalar::monomial(6, 2)));
  CHECK(apply_operator(QOperator::ad(), BargmannVector::basis(0)) == BargmannVector::basis(1));
  CHECK(apply_operator(QOperator::a(), BargmannVector::basis(0)).is_zero());
  CHECK(apply_operator(QOperator::number(), BargmannVector::basis(4)) == BargmannVector::basis(4, HbarScalar::monomial(4, 1)));
  CHECK(apply_operator(QOperator::monomial(0, 4), BargmannVector::basis(3)).is_zero());
}

TEST_CASE("the action is a module action") {
  RandomAlgebra rng(13);
  for (int i = 0; i < 30; ++i) {
    const QOperator f = rng.hbar_operator(3), g = rng.hbar_operator(3);
    const BargmannVector v = random_vector(rng);
    CHECK(apply_operator(normal_order_product(f, g), v) == apply_operator(f, apply_operator(g, v)));
  }
}

TEST_CASE("inner product") {
  for (unsigned j = 0; j < 6; ++j)
    CHECK(inner_product(BargmannVector::basis(j), BargmannVector::basis(j)) ==
          HbarScalar::monomial(factorial(j), static_cast<int>(j)));
  CHECK(inner_product(BargmannVector::basis(1), BargmannVector::basis(2)).is_zero());
}

TEST_CASE("dagger is the adjoint") {
  RandomAlgebra rng(14);
  for (int i = 0; i < 30; ++i) {
    const QOperator f = rng.hbar_operator(3);
    const BargmannVector v = random_vector(rng), w = random_vector(rng);
    CHECK(inner_product(apply_operator(f, v), w) == inner_product(v, apply_operator(dagger(f), w)));
  }
}

TEST_CASE("the representation is faithful on small operators") {
  RandomAlgebra rng(15);
  for (int i = 0; i < 20; ++i) {
    const QOperator f = rng.hbar_operator(3);
    if (f.is_zero()) continue;
    bool seen = false;
    for (unsigned m = 0; m <= 3 && !seen; ++m) seen = !apply_operator(f, BargmannVector::basis(m)).is_zero();
    CHECK(seen);
  }
}

TEST_CASE("trace series") {
  // <z^n, a^+a z^n> = n hbar * n! hbar^n
  const TraceSeries t = trace_series(QOperator::number(), 6);
  CHECK(t.value == HbarScalar::monomial(1, 2) + HbarScalar::monomial(4, 3) + HbarScalar::monomial(18, 4) +
                       HbarScalar::monomial(96, 5));
  CHECK(t.order == 6);
  CHECK(trace_series(QOperator::a(), 6).value.is_zero());
  const TraceSeries one = trace_series(QOperator(HbarScalar(1)), 4);
  CHECK(one.value == HbarScalar(1) + h + HbarScalar::monomial(2, 2) + HbarScalar::monomial(6, 3));
  CHECK(trace_series(QOperator::monomial(1, 1, h), 5).value == HbarScalar::monomial(1, 3) + HbarScalar::monomial(4, 4));
}

TEST_CASE("Borel transform of a trace") {
  const BorelTrace b = borel_hbar(trace_series(QOperator(HbarScalar(1)), 5));
  CHECK(b.constant == 1);
  CHECK(b.transform.value == HbarScalar(1) + HbarScalar::monomial(2, 1) + HbarScalar::monomial(3, 2) +
                                 HbarScalar::monomial(4, 3));
  CHECK(b.transform.order == 4);
}

TEST_CASE("vector rendering") {
  CHECK(BargmannVector().to_string() == "0");
  CHECK_FALSE(BargmannVector::basis(2, HbarScalar::monomial(-1, -1)).to_string().empty());
}
