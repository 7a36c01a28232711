#include "hbarkit/uni_poly.hpp"

#include <algorithm>

namespace hbarkit {

UniPoly::UniPoly(std::string var, std::vector<std::string> parameters, std::vector<MultiPoly> coefficients)
    : var_(std::move(var)), params_(std::move(parameters)), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.variables() != params_) throw ComputationError("coefficient over the wrong parameter list");
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_multi(const MultiPoly& p, const std::string& var) {
  const std::size_t idx = p.variable_index(var);
  std::vector<std::string> params;
  for (std::size_t i = 0; i < p.variables().size(); ++i)
    if (i != idx) params.push_back(p.variables()[i]);
  std::vector<MultiPoly> coeffs(p.is_zero() ? 0 : p.degree_in(idx) + 1, MultiPoly(params));
  for (const auto& [e, c] : p.terms()) {
    Exponents rest;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != idx) rest.push_back(e[i]);
    coeffs[e[idx]].add_term(rest, c);
  }
  return UniPoly(var, params, std::move(coeffs));
}

unsigned UniPoly::degree() const {
  if (coeffs_.empty()) throw ComputationError("degree of the zero polynomial");
  return static_cast<unsigned>(coeffs_.size() - 1);
}

UniPoly UniPoly::derivative() const {
  std::vector<MultiPoly> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
  return UniPoly(var_, params_, std::move(out));
}

MultiPoly UniPoly::to_multi() const {
  std::vector<std::string> vars = params_;
  vars.push_back(var_);
  MultiPoly out(vars);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    for (const auto& [e, c] : coeffs_[k].terms()) {
      Exponents full = e;
      full.push_back(static_cast<unsigned>(k));
      out.add_term(full, c);
    }
  return out;
}

MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> m, const std::vector<std::string>& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, 1);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return MultiPoly(vars);
      std::swap(m[k], m[swap_with]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto q = num.exact_divide(prev);
        if (!q) throw ComputationError("Bareiss step not exact (internal error)");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(vars);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

MultiPoly resultant(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) throw ComputationError("undefined resultant");
  if (p.parameters() != q.parameters()) throw ComputationError("resultant of polynomials over different parameters");
  const auto& vars = p.parameters();
  const std::size_t dp = p.degree(), dq = q.degree();
  const std::size_t n = dp + dq;
  if (n == 0) return MultiPoly::constant(vars, 1);
  std::vector<std::vector<MultiPoly>> s(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
  for (std::size_t r = 0; r < dq; ++r)
    for (std::size_t k = 0; k <= dp; ++k) s[r][r + k] = p.coefficients()[dp - k];
  for (std::size_t r = 0; r < dp; ++r)
    for (std::size_t k = 0; k <= dq; ++k) s[dq + r][r + k] = q.coefficients()[dq - k];
  return bareiss_determinant(std::move(s), vars);
}

}  // namespace hbarkit
