#include "hbarkit/qoperator.hpp"

#include <algorithm>
#include <sstream>

namespace hbarkit {

namespace {

const std::vector<std::string>& symbol_vars() {
  static const std::vector<std::string> vars{"x", "y"};
  return vars;
}

// Shared renderer for operator and symbol terms: `atoms` names (creation, annihilation).
std::string render_terms(const std::map<Ladder, HbarScalar>& terms, const char* left, const char* right) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Ladder, HbarScalar>> ordered(terms.begin(), terms.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
    unsigned dl = l.first.creation + l.first.annihilation, dr = r.first.creation + r.first.annihilation;
    if (dl != dr) return dl > dr;
    return l.first.creation > r.first.creation;
  });
  for (const auto& [key, coeff] : ordered) {
    for (auto it = coeff.terms().rbegin(); it != coeff.terms().rend(); ++it) {
      const auto& [k, c] = *it;
      Rational mag = abs(c);
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      std::vector<std::string> factors;
      if (mag != 1) factors.push_back(mag.get_str());
      if (k != 0) factors.push_back(k == 1 ? "h" : "h^" + (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k)));
      if (key.creation) factors.push_back(key.creation == 1 ? left : std::string(left) + "^" + std::to_string(key.creation));
      if (key.annihilation)
        factors.push_back(key.annihilation == 1 ? right : std::string(right) + "^" + std::to_string(key.annihilation));
      if (factors.empty()) factors.push_back("1");
      for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
  }
  return os.str();
}

}  // namespace

QOperator QOperator::monomial(unsigned creation, unsigned annihilation, const HbarScalar& c) {
  QOperator q;
  q.add_term({creation, annihilation}, c);
  return q;
}

HbarScalar QOperator::coefficient(unsigned creation, unsigned annihilation) const {
  auto it = terms_.find({creation, annihilation});
  return it == terms_.end() ? HbarScalar{} : it->second;
}

void QOperator::add_term(Ladder key, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool QOperator::is_hbar_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_nonnegative(); });
}

bool QOperator::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.creation == t.first.annihilation; });
}

unsigned QOperator::degree() const {
  unsigned d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.creation + k.annihilation);
  return d;
}

unsigned QOperator::max_shift() const {
  unsigned s = 0;
  for (const auto& [k, c] : terms_)
    s = std::max(s, k.creation > k.annihilation ? k.creation - k.annihilation : k.annihilation - k.creation);
  return s;
}

unsigned QOperator::max_annihilation() const {
  unsigned s = 0;
  for (const auto& [k, c] : terms_) s = std::max(s, k.annihilation);
  return s;
}

QOperator& QOperator::operator+=(const QOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

QOperator& QOperator::operator-=(const QOperator& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

QOperator& QOperator::operator*=(const HbarScalar& c) {
  QOperator out;
  for (const auto& [k, v] : terms_) out.add_term(k, v * c);
  *this = std::move(out);
  return *this;
}

QOperator QOperator::operator-() const {
  QOperator out;
  for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, -v);
  return out;
}

std::string QOperator::to_string() const { return render_terms(terms_, "ad", "a"); }

QOperator normal_order_product(const QOperator& f, const QOperator& g) {
  QOperator out;
  for (const auto& [kf, cf] : f.terms()) {
    for (const auto& [kg, cg] : g.terms()) {
      // (a^+)^i a^j (a^+)^k a^l: contract the inner a^j (a^+)^k.
      const unsigned j = kf.annihilation, k = kg.creation;
      const HbarScalar c = cf * cg;
      for (unsigned m = 0; m <= std::min(j, k); ++m) {
        Rational weight(factorial(m) * binomial(j, m) * binomial(k, m));
        out.add_term({kf.creation + k - m, j - m + kg.annihilation}, (c * weight).shifted(static_cast<int>(m)));
      }
    }
  }
  return out;
}

QOperator power(const QOperator& f, unsigned n) {
  QOperator out(HbarScalar(1));
  for (unsigned i = 0; i < n; ++i) out = normal_order_product(out, f);
  return out;
}

QOperator scaled_commutator(const QOperator& f, const QOperator& g) {
  QOperator out = normal_order_product(f, g) - normal_order_product(g, f);
  QOperator scaled;
  for (const auto& [k, c] : out.terms()) scaled.add_term(k, c.shifted(-1));
  return scaled;
}

QOperator dagger(const QOperator& f) {
  QOperator out;
  for (const auto& [k, c] : f.terms()) out.add_term({k.annihilation, k.creation}, c);
  return out;
}

HbarScalar SymbolPoly::coefficient(unsigned xe, unsigned ye) const {
  auto it = terms_.find({xe, ye});
  return it == terms_.end() ? HbarScalar{} : it->second;
}

void SymbolPoly::add_term(Ladder key, const HbarScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::string SymbolPoly::to_string() const { return render_terms(terms_, "x", "y"); }

SymbolPoly total_symbol(const QOperator& f) {
  SymbolPoly s;
  for (const auto& [k, c] : f.terms()) s.add_term(k, c);
  return s;
}

MultiPoly principal_symbol(const QOperator& f) {
  if (!f.is_hbar_nonnegative()) throw ComputationError("not in Q: negative power of hbar");
  MultiPoly out(symbol_vars());
  for (const auto& [k, c] : f.terms()) out.add_term({k.creation, k.annihilation}, c.coefficient(0));
  return out;
}

BorelSymbol borel_symbol(const QOperator& f) {
  if (!f.is_hbar_nonnegative()) throw ComputationError("not in Q: negative power of hbar");
  BorelSymbol out{SymbolPoly{}, MultiPoly(symbol_vars())};
  for (const auto& [key, c] : f.terms()) {
    HbarScalar transformed;
    for (const auto& [k, v] : c.terms()) {
      if (k == 0) {
        out.constant_part.add_term({key.creation, key.annihilation}, v);
      } else {
        transformed.add_term(k - 1, v / Rational(factorial(static_cast<unsigned long>(k - 1))));
      }
    }
    out.transform.add_term(key, transformed);
  }
  return out;
}

HbarScalar ev_pairing(const QOperator& f, const QOperator& g) {
  return normal_order_product(dagger(f), g).coefficient(0, 0);
}

}  // namespace hbarkit
