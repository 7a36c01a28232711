#include <doctest.h>

#include "hbarkit/classical.hpp"
#include "hbarkit/henon_heiles.hpp"
#include "hbarkit/parser.hpp"
#include "hbarkit/random_ops.hpp"

using namespace hbarkit;

namespace {

const std::vector<std::string> kXY{"x", "y"};
MultiPoly poly(const char* text, const std::vector<std::string>& vars = kXY) {
  return parse_commutative_poly(text, vars);
}

}  // namespace

TEST_CASE("Poisson bracket conventions") {
  CHECK(poisson_bracket_xy(poly("y"), poly("x")) == poly("1"));
  CHECK(poisson_bracket_xy(poly("x"), poly("y")) == poly("-1"));
  CHECK(poisson_bracket_xy(poly("x*y"), poly("x^2")) == poly("2*x^2"));
  const std::vector<std::string> v4{"q1", "p1", "q2", "p2"};
  const auto f = SymplecticPoly::consecutive(poly("q1^2 + p1^2", v4));
  const auto g = SymplecticPoly::consecutive(poly("q2^2 + p2^2", v4));
  CHECK(poisson_bracket(f, g).poly.is_zero());
}

TEST_CASE("Poisson bracket identities on random polynomials") {
  RandomAlgebra rng(61);
  const std::vector<std::string> v4{"x1", "y1", "x2", "y2"};
  for (int i = 0; i < 20; ++i) {
    const auto f = SymplecticPoly::consecutive(rng.poly(v4, 3));
    const auto g = SymplecticPoly::consecutive(rng.poly(v4, 3));
    const auto k = SymplecticPoly::consecutive(rng.poly(v4, 3));
    const auto br = [](const SymplecticPoly& a, const SymplecticPoly& b) { return poisson_bracket(a, b); };
    CHECK((br(f, g).poly + br(g, f).poly).is_zero());
    const MultiPoly jacobi = br(f, br(g, k)).poly + br(g, br(k, f)).poly + br(k, br(f, g)).poly;
    CHECK(jacobi.is_zero());
    const auto gk = SymplecticPoly{g.poly * k.poly, g.pairs};
    CHECK(br(f, gk).poly == br(f, g).poly * k.poly + g.poly * br(f, k).poly);
  }
}

TEST_CASE("Milnor numbers") {
  CHECK(milnor_number(poly("x*y")).value == 1);
  CHECK(milnor_number(poly("x^2 + y^2")).value == 1);
  CHECK(milnor_number(poly("x^3 + y^3")).value == 4);
  CHECK(milnor_number(poly("x^3 + y^3")).sequence.front() == 1);
  CHECK(milnor_number(poly("x^2*y + y^4")).value == 5);  // D5
  for (unsigned a = 1; a <= 4; ++a)
    for (unsigned b = 1; b <= 4; ++b) {
      const std::string text = "x^" + std::to_string(a + 1) + " + y^" + std::to_string(b + 1);
      CHECK(milnor_number(poly(text.c_str())).value == a * b);
    }
}

TEST_CASE("truncated codimensions are monotone and stabilize") {
  const StabilizedDimension d = milnor_number(poly("x^4 + y^3 + x^2*y"));
  REQUIRE(d.sequence.size() >= 2);
  for (std::size_t i = 1; i < d.sequence.size(); ++i) CHECK(d.sequence[i - 1] <= d.sequence[i]);
  CHECK(d.sequence[d.stabilized_at - 1] == d.value);
  CHECK(d.sequence[d.stabilized_at] == d.value);
}

TEST_CASE("invariance under linear symplectic changes of variables") {
  RandomAlgebra rng(62);
  const std::vector<MultiPoly> shear{poly("x + 2*y"), poly("y")};
  const std::vector<MultiPoly> other{poly("x"), poly("y - 3/2*x")};
  for (const char* text : {"x^3 + y^3", "x^2*y + y^4", "x^4 + y^2", "x*y + x^3"}) {
    const MultiPoly f = poly(text);
    const unsigned mu = milnor_number(f).value;
    CHECK(milnor_number(f.substituted(shear)).value == mu);
    CHECK(milnor_number(f.substituted(other)).value == mu);
    CHECK(lagrange_h1_dim(f.substituted(shear)).value == lagrange_h1_dim(f).value);
  }
}

TEST_CASE("Lagrange H1 dimension") {
  CHECK(lagrange_h1_dim(poly("x*y")).value == 1);
  // Quasi-homogeneous germs: the dimension equals the Milnor number.
  for (const char* text : {"x^3 + y^3", "x^2 + y^5", "x^2*y + y^4", "x^4 + y^3"})
    CHECK(lagrange_h1_dim(poly(text)).value == milnor_number(poly(text)).value);
}

TEST_CASE("degenerate input is rejected") {
  CHECK_THROWS_WITH_AS(milnor_number(poly("x^2"), 12), "non-isolated singularity suspected", ComputationError);
  CHECK_THROWS_AS(lagrange_h1_dim(poly("x^2*y^2"), 12), ComputationError);
  CHECK_THROWS_AS(milnor_number(poly("x + y")), ComputationError);
  CHECK_THROWS_AS(milnor_number(poly("x*y + 1")), ComputationError);
}

TEST_CASE("multiplicity at the origin") {
  CHECK(multiplicity_at_origin(poly("x^2 + y^3")) == 2);
  CHECK(multiplicity_at_origin(poly("x^3*y + y^7")) == 4);
  CHECK(multiplicity_at_origin(poly("1 + x")) == 0);
  CHECK_THROWS_AS(multiplicity_at_origin(poly("0")), ComputationError);
}

TEST_CASE("discriminants") {
  const std::vector<std::string> lx{"l", "x"};
  CHECK(polynomial_discriminant(UniPoly::from_multi(poly("x^2 - l", lx), "x")) == poly("-4*l", {"l"}));
  const std::vector<std::string> cubic{"p", "q", "x"};
  CHECK(polynomial_discriminant(UniPoly::from_multi(poly("x^3 + p*x + q", cubic), "x")) ==
        poly("4*p^3 + 27*q^2", {"p", "q"}));
  CHECK_THROWS_AS(polynomial_discriminant(UniPoly::from_multi(poly("x - l", lx), "x")), ComputationError);
}

TEST_CASE("Henon-Heiles pair") {
  const HenonHeilesReport r = henon_heiles_suite();
  CHECK(r.commuting());
  CHECK(r.lax_identity());
  const std::vector<std::string> lam{"l1", "l2"};
  CHECK(r.discriminant == poly("-1/2*l2^5 - 27/2*l1^4*l2^2", lam));
  CHECK_FALSE(r.stated.factorization.has_value());
  REQUIRE(r.corrected.factorization.has_value());
  CHECK(r.corrected.factorization->unit == make_rational(-1, 2));
  CHECK(r.corrected.factorization->exponents == std::vector<unsigned>{2, 1});
  CHECK(r.reduced_multiplicity == 4u);
  CHECK(r.betti == 4u);
  CHECK(r.raw_multiplicity == 5);
  CHECK(r.torus_bracket.is_zero());
  CHECK(r.torus_discriminant == poly("l1*l2", lam));
  CHECK(r.torus_multiplicity == 2);
  CHECK(r.torus_betti == 2);

  MomentPair pair{{SymplecticPoly::consecutive(henon_heiles::h1()), SymplecticPoly::consecutive(henon_heiles::h2())}};
  CHECK(pair.pairwise_commuting());
  MomentPair broken{{SymplecticPoly::consecutive(henon_heiles::h1()),
                     SymplecticPoly::consecutive(parse_commutative_poly("q1", henon_heiles::phase_variables()))}};
  CHECK_FALSE(broken.pairwise_commuting());
}
