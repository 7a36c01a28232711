#include "hbarkit/normal_form.hpp"

#include <algorithm>
#include <sstream>

namespace hbarkit {

HbarScalar UPoly::coefficient(unsigned power) const {
  auto it = terms_.find(power);
  return it == terms_.end() ? HbarScalar{} : it->second;
}

void UPoly::add_term(unsigned power, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(power, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool UPoly::is_hbar_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_nonnegative(); });
}

UPoly& UPoly::operator+=(const UPoly& o) {
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

UPoly operator*(const UPoly& p, const UPoly& q) {
  UPoly out;
  for (const auto& [i, a] : p.terms_)
    for (const auto& [j, b] : q.terms_) out.add_term(i + j, a * b);
  return out;
}

HbarScalar UPoly::evaluate(const HbarScalar& u) const {
  HbarScalar out;
  HbarScalar power = 1;
  unsigned at = 0;
  for (const auto& [p, c] : terms_) {
    while (at < p) {
      power *= u;
      ++at;
    }
    out += c * power;
  }
  return out;
}

QOperator UPoly::to_operator() const {
  QOperator out;
  QOperator power(HbarScalar(1));
  unsigned at = 0;
  for (const auto& [p, c] : terms_) {
    while (at < p) {
      power = normal_order_product(power, QOperator::number());
      ++at;
    }
    out += power * c;
  }
  return out;
}

std::string UPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& p = it->first;
    HbarScalar c = it->second;
    const bool negative = c.is_monomial() && c.terms().begin()->second < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string coeff = c.is_monomial() ? c.to_string() : "(" + c.to_string() + ")";
    if (p == 0) {
      os << coeff;
      continue;
    }
    if (!(c == HbarScalar(1))) os << coeff << "*";
    os << "u" << (p > 1 ? "^" + std::to_string(p) : "");
  }
  return os.str();
}

OperatorJet evolve(const QOperator& h, unsigned order) {
  if (!h.is_hbar_nonnegative()) throw ComputationError("evolve: generator has a negative power of hbar");
  OperatorJet u = OperatorJet::identity(order);
  for (unsigned k = 1; k <= order; ++k)
    u[k] = normal_order_product(h, u[k - 1]) * HbarScalar(make_rational(1, static_cast<long>(k)));
  return u;
}

OperatorJet conjugate(const OperatorJet& f, const OperatorJet& u) {
  return u * f * inverse(u);
}

OperatorJet conjugate(const QOperator& f, const OperatorJet& u, unsigned order) {
  if (u.order() != order) throw ComputationError("conjugation jet has the wrong order");
  OperatorJet fj(order);
  fj[0] = f;
  return conjugate(fj, u);
}

UPoly diagonal_to_u(const QOperator& diagonal) {
  if (!diagonal.is_diagonal()) throw ComputationError("diagonal_to_u: off-diagonal term present");
  UPoly out;
  for (const auto& [key, c] : diagonal.terms()) {
    // u (u - hbar) ... (u - (i-1) hbar)
    UPoly falling;
    falling.add_term(0, 1);
    for (unsigned r = 0; r < key.creation; ++r) {
      UPoly factor;
      factor.add_term(1, 1);
      factor.add_term(0, HbarScalar::monomial(-static_cast<long>(r), 1));
      falling = falling * factor;
    }
    UPoly scaled;
    for (const auto& [p, v] : falling.terms()) scaled.add_term(p, v * c);
    out += scaled;
  }
  return out;
}

OperatorJet lie_transform(const QOperator& generator, unsigned step, const OperatorJet& h) {
  if (step == 0) throw ComputationError("Lie transform step must be positive");
  const unsigned order = h.order();
  OperatorJet out = h;
  OperatorJet term = h;  // L^m h / m!, shifted by m * step
  for (unsigned m = 1; m * step <= order; ++m) {
    OperatorJet next(order);
    for (unsigned k = 0; k + step <= order; ++k) {
      if (term[k].is_zero()) continue;
      next[k + step] = scaled_commutator(generator, term[k]) * HbarScalar(make_rational(1, static_cast<long>(m)));
    }
    term = std::move(next);
    out += term;
  }
  return out;
}

std::vector<HbarScalar> NormalFormResult::evaluate(const HbarScalar& value) const {
  std::vector<HbarScalar> out;
  for (const auto& p : psi) out.push_back(p.evaluate(value));
  return out;
}

NormalFormResult quantum_birkhoff(const OperatorJet& hamiltonian, Elimination mode) {
  const unsigned order = hamiltonian.order();
  if (!(hamiltonian[0] == QOperator::number())) throw ComputationError("unsupported quadratic part");

  NormalFormResult result{{}, {}, hamiltonian, OperatorJet(order)};
  UPoly u;
  u.add_term(1, 1);
  result.psi.push_back(u);

  OperatorJet& h = result.conjugated;
  for (unsigned k = 1; k <= order; ++k) {
    std::vector<QOperator> pieces;
    QOperator total;
    for (const auto& [key, c] : h[k].terms()) {
      if (key.creation == key.annihilation) continue;
      const long gap = static_cast<long>(key.annihilation) - static_cast<long>(key.creation);
      QOperator g = QOperator::monomial(key.creation, key.annihilation, c * HbarScalar(make_rational(-1, gap)));
      total += g;
      pieces.push_back(std::move(g));
    }
    switch (mode) {
      case Elimination::combined:
        if (!total.is_zero()) h = lie_transform(total, k, h);
        break;
      case Elimination::ascending:
        for (const auto& g : pieces) h = lie_transform(g, k, h);
        break;
      case Elimination::descending:
        for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) h = lie_transform(*it, k, h);
        break;
    }
    result.generators.push_back(std::move(total));
    result.psi.push_back(diagonal_to_u(h[k]));
  }

  for (unsigned k = 0; k <= order; ++k) result.residual[k] = h[k] - result.psi[k].to_operator();
  return result;
}

NormalFormResult quantum_birkhoff(const QOperator& perturbation, unsigned order) {
  if (!perturbation.is_hbar_nonnegative()) throw ComputationError("perturbation has a negative power of hbar");
  OperatorJet h(order);
  h[0] = QOperator::number();
  if (order >= 1) h[1] = perturbation;
  return quantum_birkhoff(h, Elimination::combined);
}

}  // namespace hbarkit
