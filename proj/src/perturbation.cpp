#include "hbarkit/perturbation.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace hbarkit {

bool EigenJet::is_hbar_nonnegative() const {
  return std::all_of(energy.begin(), energy.end(), [](const HbarScalar& e) { return e.is_nonnegative(); }) &&
         std::all_of(vector.begin(), vector.end(), [](const BargmannVector& v) { return v.is_hbar_nonnegative(); });
}

EigenJet rs_expand(const OperatorJet& hamiltonian, unsigned level) {
  const unsigned order = hamiltonian.order();
  const QOperator& h0 = hamiltonian[0];
  if (!h0.is_diagonal()) throw ComputationError("unperturbed operator is not diagonal");
  auto diagonal_value = [&](unsigned m) { return apply_operator(h0, BargmannVector::basis(m)).coefficient(m); };
  const HbarScalar e0 = diagonal_value(level);

  EigenJet jet;
  jet.level = level;
  jet.order = order;
  jet.energy.push_back(e0);
  jet.vector.push_back(BargmannVector::basis(level));

  for (unsigned k = 1; k <= order; ++k) {
    // sum_{r=1..k} H_r psi_{k-r}
    BargmannVector pushed;
    for (unsigned r = 1; r <= k; ++r)
      if (!hamiltonian[r].is_zero()) pushed += apply_operator(hamiltonian[r], jet.vector[k - r]);
    const HbarScalar ek = pushed.coefficient(level);
    jet.energy.push_back(ek);

    // (H_0 - E_0) psi_k = sum_{r=1..k} E_r psi_{k-r} - pushed
    BargmannVector rhs = pushed * HbarScalar(-1);
    for (unsigned r = 1; r <= k; ++r) rhs += jet.vector[k - r] * jet.energy[r];
    BargmannVector psi;
    for (const auto& [m, c] : rhs.terms()) {
      if (m == level) continue;  // vanishes by the choice of E_k
      const HbarScalar gap = diagonal_value(m) - e0;
      if (gap.is_zero()) throw ComputationError("degenerate unperturbed level " + std::to_string(m));
      psi.add_term(m, c.divided_by(gap));
    }
    jet.vector.push_back(std::move(psi));
  }
  return jet;
}

EigenJet rs_expand(const QOperator& perturbation, unsigned level, unsigned order) {
  OperatorJet h(order);
  h[0] = QOperator::number();
  if (order >= 1) h[1] = perturbation;
  return rs_expand(h, level);
}

EigenJet relative_substitute(const EigenJet& jet) {
  EigenJet out = jet;
  for (std::size_t k = 0; k < out.energy.size(); ++k) out.energy[k] = out.energy[k].shifted(static_cast<int>(k));
  for (std::size_t k = 0; k < out.vector.size(); ++k) out.vector[k] *= HbarScalar::hbar(static_cast<int>(k));
  return out;
}

namespace {

// Power series in t (coefficients 0..order) with hbar-scalar entries.
using Series = std::vector<HbarScalar>;
// One series per basis state of the truncation window.
using VectorSeries = std::vector<Series>;

}  // namespace

EigenJet matrix_oracle(const QOperator& perturbation, unsigned level, unsigned order) {
  const unsigned dim = level + order * perturbation.max_shift() + 1;
  // v[m][l] = [z^m] P z^l on the window.
  std::vector<std::vector<HbarScalar>> v(dim, std::vector<HbarScalar>(dim));
  for (unsigned l = 0; l < dim; ++l) {
    const auto col = apply_operator(perturbation, BargmannVector::basis(l));
    for (const auto& [m, c] : col.terms())
      if (m < dim) v[m][l] = c;
  }
  // Resolvent of the unperturbed part on the complement of |n>: 1 / ((n - m) hbar).
  std::vector<HbarScalar> resolvent(dim);
  for (unsigned m = 0; m < dim; ++m)
    if (m != level)
      resolvent[m] = HbarScalar::monomial(make_rational(1, static_cast<long>(level) - static_cast<long>(m)), -1);

  // t V applied to a vector series, projected on the complement.
  auto apply_tv = [&](const VectorSeries& x) {
    VectorSeries out(dim, Series(order + 1));
    for (unsigned m = 0; m < dim; ++m)
      for (unsigned l = 0; l < dim; ++l) {
        if (v[m][l].is_zero()) continue;
        for (unsigned k = 0; k < order; ++k)
          if (!x[l][k].is_zero()) out[m][k + 1] += v[m][l] * x[l][k];
      }
    return out;
  };

  Series eps(order + 1);
  VectorSeries psi_q(dim, Series(order + 1));
  for (unsigned iteration = 0; iteration < order; ++iteration) {
    // psi_Q = sum_j (R (tV_QQ - eps))^j R t V_Qn
    VectorSeries unit(dim, Series(order + 1));
    unit[level][0] = 1;
    VectorSeries term = apply_tv(unit);
    term[level].assign(order + 1, HbarScalar{});
    for (unsigned m = 0; m < dim; ++m)
      for (auto& c : term[m]) c *= resolvent[m];
    VectorSeries sum = term;
    for (unsigned j = 1; j < order; ++j) {
      VectorSeries next = apply_tv(term);
      for (unsigned m = 0; m < dim; ++m) {
        if (m == level) {
          next[m].assign(order + 1, HbarScalar{});
          continue;
        }
        for (unsigned a = 1; a <= order; ++a)
          for (unsigned b = 0; a + b <= order; ++b)
            if (!eps[a].is_zero() && !term[m][b].is_zero()) next[m][a + b] -= eps[a] * term[m][b];
        for (auto& c : next[m]) c *= resolvent[m];
      }
      term = std::move(next);
      for (unsigned m = 0; m < dim; ++m)
        for (unsigned k = 0; k <= order; ++k) sum[m][k] += term[m][k];
    }
    psi_q = std::move(sum);
    // eps = <n| t V |n + psi_Q>
    VectorSeries full = psi_q;
    full[level][0] = 1;
    eps = apply_tv(full)[level];
  }

  EigenJet jet;
  jet.level = level;
  jet.order = order;
  for (unsigned k = 0; k <= order; ++k) {
    jet.energy.push_back(k == 0 ? HbarScalar::monomial(static_cast<long>(level), 1) : eps[k]);
    BargmannVector vk;
    if (k == 0) vk.add_term(level, 1);
    for (unsigned m = 0; m < dim; ++m)
      if (m != level) vk.add_term(m, psi_q[m][k]);
    jet.vector.push_back(std::move(vk));
  }
  return jet;
}

std::vector<BargmannVector> eigen_defect(const QOperator& perturbation, const EigenJet& jet) {
  std::vector<BargmannVector> out;
  const QOperator number = QOperator::number();
  for (unsigned k = 0; k <= jet.order; ++k) {
    BargmannVector d = apply_operator(number, jet.vector[k]);
    if (k >= 1) d += apply_operator(perturbation, jet.vector[k - 1]);
    for (unsigned r = 0; r <= k; ++r) d -= jet.vector[k - r] * jet.energy[r];
    out.push_back(std::move(d));
  }
  return out;
}

BorelSequence borel_sequence(const std::vector<Rational>& c) {
  if (c.size() < 2) throw ComputationError("Borel transform needs at least two coefficients");
  BorelSequence out{{}, c.front()};
  for (std::size_t k = 0; k + 1 < c.size(); ++k) out.transform.push_back(c[k + 1] / Rational(factorial(k)));
  return out;
}

GevreyFit gevrey_estimate(const std::vector<Rational>& c) {
  constexpr std::size_t kMinLength = 8;
  constexpr std::size_t kMinNonzero = 6;
  std::vector<std::pair<double, double>> samples;  // (k, log|c_k|)
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) samples.emplace_back(static_cast<double>(k), log_abs(c[k]));
  if (c.size() < kMinLength || samples.size() < kMinNonzero) throw ComputationError("insufficient data");

  Eigen::MatrixXd design(samples.size(), 3);
  Eigen::VectorXd rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double k = samples[i].first;
    design(i, 0) = 1.0;
    design(i, 1) = k;
    design(i, 2) = k > 0 ? k * std::log(k) - k : 0.0;
    rhs(i) = samples[i].second;
  }
  const Eigen::VectorXd fit = design.colPivHouseholderQr().solve(rhs);
  const Eigen::VectorXd r = design * fit - rhs;
  return {fit(2), std::sqrt(r.squaredNorm() / static_cast<double>(samples.size()))};
}

}  // namespace hbarkit
