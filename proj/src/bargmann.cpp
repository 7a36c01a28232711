#include "hbarkit/bargmann.hpp"

#include <algorithm>
#include <sstream>

namespace hbarkit {

BargmannVector BargmannVector::basis(unsigned m, const HbarScalar& c) {
  BargmannVector v;
  v.add_term(m, c);
  return v;
}

HbarScalar BargmannVector::coefficient(unsigned m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? HbarScalar{} : it->second;
}

void BargmannVector::add_term(unsigned m, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BargmannVector::is_hbar_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_nonnegative(); });
}

BargmannVector& BargmannVector::operator+=(const BargmannVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BargmannVector& BargmannVector::operator-=(const BargmannVector& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BargmannVector& BargmannVector::operator*=(const HbarScalar& c) {
  BargmannVector out;
  for (const auto& [m, v] : terms_) out.add_term(m, v * c);
  *this = std::move(out);
  return *this;
}

std::string BargmannVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    const auto& c = it->second;
    const bool unit = c == HbarScalar(1) && it->first > 0;
    if (!unit) os << (c.is_monomial() ? c.to_string() : "(" + c.to_string() + ")");
    if (it->first > 0) os << (unit ? "" : "*") << "z" << (it->first > 1 ? "^" + std::to_string(it->first) : "");
  }
  return os.str();
}

BargmannVector apply_operator(const QOperator& f, const BargmannVector& v) {
  BargmannVector out;
  for (const auto& [key, c] : f.terms()) {
    for (const auto& [m, vm] : v.terms()) {
      if (key.annihilation > m) continue;
      Rational weight(falling_factorial(m, key.annihilation));
      out.add_term(m - key.annihilation + key.creation,
                   (c * vm * weight).shifted(static_cast<int>(key.annihilation)));
    }
  }
  return out;
}

HbarScalar inner_product(const BargmannVector& v, const BargmannVector& w) {
  HbarScalar out;
  for (const auto& [m, vm] : v.terms()) {
    auto it = w.terms().find(m);
    if (it == w.terms().end()) continue;
    out += (vm * it->second * Rational(factorial(m))).shifted(static_cast<int>(m));
  }
  return out;
}

TraceSeries trace_series(const QOperator& f, unsigned order) {
  if (order < 1) throw ComputationError("trace truncation order must be at least 1");
  // Level n contributes at hbar-order >= n + (lowest hbar power of F).
  int lowest = 0;
  for (const auto& [k, c] : f.terms()) lowest = std::min(lowest, *c.min_exponent());
  const unsigned levels = order + static_cast<unsigned>(-lowest);
  HbarScalar sum;
  for (unsigned n = 0; n < levels; ++n) {
    const auto zn = BargmannVector::basis(n);
    sum += inner_product(zn, apply_operator(f, zn));
  }
  return {sum.truncated_below(static_cast<int>(order)), order};
}

BorelTrace borel_hbar(const TraceSeries& s) {
  BorelTrace out{{HbarScalar{}, s.order > 0 ? s.order - 1 : 0}, 0};
  for (const auto& [k, c] : s.value.terms()) {
    if (k < 0) throw ComputationError("Borel transform of a Laurent hbar-series");
    if (k == 0) {
      out.constant = c;
      continue;
    }
    out.transform.value.add_term(k - 1, c / Rational(factorial(static_cast<unsigned long>(k - 1))));
  }
  return out;
}

}  // namespace hbarkit
