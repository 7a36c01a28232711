#include "hbarkit/classical.hpp"

namespace hbarkit {

SymplecticPoly SymplecticPoly::consecutive(MultiPoly p) {
  const std::size_t n = p.variables().size();
  if (n % 2 != 0) throw ComputationError("symplectic polynomial needs an even number of variables");
  SymplecticPoly out{std::move(p), {}};
  for (std::size_t i = 0; i < n; i += 2) out.pairs.emplace_back(i, i + 1);
  return out;
}

SymplecticPoly poisson_bracket(const SymplecticPoly& f, const SymplecticPoly& g) {
  if (f.pairs != g.pairs || f.poly.variables() != g.poly.variables())
    throw ComputationError("Poisson bracket of polynomials with different symplectic pairings");
  MultiPoly out(f.poly.variables());
  for (const auto& [x, y] : f.pairs) {
    out += f.poly.derivative(y) * g.poly.derivative(x);
    out -= f.poly.derivative(x) * g.poly.derivative(y);
  }
  return {std::move(out), f.pairs};
}

MultiPoly poisson_bracket_xy(const MultiPoly& f, const MultiPoly& g) {
  return poisson_bracket(SymplecticPoly::consecutive(f), SymplecticPoly::consecutive(g)).poly;
}

namespace {

void require_plane_germ(const MultiPoly& f) {
  if (f.variables().size() != 2) throw ComputationError("expected a polynomial in two variables");
  const Exponents origin(2, 0);
  if (f.coefficient(origin) != 0) throw ComputationError("f(0) != 0");
  if (f.coefficient({1, 0}) != 0 || f.coefficient({0, 1}) != 0) throw ComputationError("df(0) != 0");
}

// Finds the first N with D_N = D_{N+1}; `codim(N)` computes D_N.
template <typename Codim>
StabilizedDimension stabilize(Codim codim, unsigned cap) {
  StabilizedDimension out;
  unsigned previous = codim(1);
  out.sequence.push_back(previous);
  for (unsigned n = 2; n <= cap; ++n) {
    const unsigned current = codim(n);
    out.sequence.push_back(current);
    if (current == previous) {
      out.value = current;
      out.stabilized_at = n - 1;
      return out;
    }
    previous = current;
  }
  throw ComputationError("non-isolated singularity suspected");
}

}  // namespace

StabilizedDimension milnor_number(const MultiPoly& f, unsigned cap) {
  require_plane_germ(f);
  const MultiPoly fx = f.derivative(0), fy = f.derivative(1);
  return stabilize(
      [&](unsigned bound) {
        std::vector<MultiPoly> gens;
        for (const auto& e : monomials_below(2, bound)) {
          const MultiPoly m = MultiPoly::monomial(f.variables(), e);
          gens.push_back((m * fx).truncated(bound));
          gens.push_back((m * fy).truncated(bound));
        }
        return span_codimension(gens, bound, 2);
      },
      cap);
}

StabilizedDimension lagrange_h1_dim(const MultiPoly& f, unsigned cap) {
  require_plane_germ(f);
  return stabilize(
      [&](unsigned bound) {
        std::vector<MultiPoly> gens;
        for (const auto& e : monomials_below(2, bound + 1)) {
          const MultiPoly m = MultiPoly::monomial(f.variables(), e);
          if (total_degree(e) < bound) gens.push_back((m * f).truncated(bound));
          gens.push_back(poisson_bracket_xy(m, f).truncated(bound));
        }
        return span_codimension(gens, bound, 2);
      },
      cap);
}

unsigned multiplicity_at_origin(const MultiPoly& p) {
  if (p.is_zero()) throw ComputationError("multiplicity of the zero polynomial");
  return p.min_degree();
}

MultiPoly polynomial_discriminant(const UniPoly& p) {
  if (p.is_zero() || p.degree() < 2) throw ComputationError("discriminant needs degree >= 2");
  return resultant(p, p.derivative());
}

bool MomentPair::pairwise_commuting() const {
  for (std::size_t i = 0; i < components.size(); ++i)
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (!poisson_bracket(components[i], components[j]).poly.is_zero()) return false;
  return true;
}

}  // namespace hbarkit
