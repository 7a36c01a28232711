#include "hbarkit/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hbarkit {

unsigned total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, const std::string& name) {
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[p.variable_index(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents e, const Rational& c) {
  MultiPoly p(std::move(variables));
  if (e.size() != p.vars_.size()) throw ComputationError("exponent vector length mismatch");
  p.add_term(e, c);
  return p;
}

std::size_t MultiPoly::variable_index(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end()) throw ComputationError("unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned MultiPoly::degree() const {
  if (terms_.empty()) throw ComputationError("degree of the zero polynomial");
  return total_degree(terms_.rbegin()->first);
}

unsigned MultiPoly::min_degree() const {
  if (terms_.empty()) throw ComputationError("minimal degree of the zero polynomial");
  return total_degree(terms_.begin()->first);
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) throw ComputationError("leading term of the zero polynomial");
  return *terms_.rbegin();
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    out.add_term(d, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::truncated(unsigned bound) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) >= bound) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& variables) const {
  std::vector<std::size_t> where;
  MultiPoly target(variables);
  for (const auto& v : vars_) where.push_back(target.variable_index(v));
  for (const auto& [e, c] : terms_) {
    Exponents ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    target.add_term(ne, c);
  }
  return target;
}

MultiPoly MultiPoly::substituted(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size()) throw ComputationError("substitution arity mismatch");
  if (images.empty()) return *this;
  const auto& target_vars = images.front().variables();
  MultiPoly out(target_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target_vars, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * images[i].pow(e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::exact_divide(const MultiPoly& divisor) const {
  require_same_variables(divisor);
  if (divisor.is_zero()) throw ComputationError("division by the zero polynomial");
  MultiPoly rem = *this;
  MultiPoly quot(vars_);
  const auto [dlead_e, dlead_c] = divisor.leading_term();
  while (!rem.is_zero()) {
    const auto [lead_e, lead_c] = rem.leading_term();
    Exponents q(lead_e.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (lead_e[i] < dlead_e[i]) return std::nullopt;
      q[i] = lead_e[i] - dlead_e[i];
    }
    MultiPoly step = monomial(vars_, q, lead_c / dlead_c);
    quot += step;
    rem -= step * divisor;
  }
  return quot;
}

void MultiPoly::require_same_variables(const MultiPoly& o) const {
  if (vars_ != o.vars_) throw ComputationError("polynomials over different variable lists");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_variables(b);
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || total_degree(e) == 0) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::vector<Exponents> monomials_below(std::size_t nvars, unsigned bound) {
  std::vector<Exponents> out;
  Exponents cur(nvars, 0);
  // Enumerate every vector with entries summing to exactly d, for d < bound.
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == nvars) {
      cur[pos] = remaining;
      out.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
  };
  if (nvars == 0) {
    if (bound > 0) out.emplace_back();
    return out;
  }
  for (unsigned d = 0; d < bound; ++d) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GradedLex{});
  return out;
}

}  // namespace hbarkit
