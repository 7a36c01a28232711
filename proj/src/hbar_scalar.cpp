#include "hbarkit/hbar_scalar.hpp"

#include <cmath>
#include <sstream>

namespace hbarkit {

Rational parse_rational(std::string_view text) {
  Rational r;
  if (text.empty() || r.set_str(std::string(text), 10) != 0) {
    throw ComputationError("malformed rational '" + std::string(text) + "'");
  }
  if (r.get_den() == 0) throw ComputationError("zero denominator");
  r.canonicalize();
  return r;
}

double log_abs(const Rational& r) {
  if (r == 0) throw ComputationError("log of zero");
  auto log_z = [](const Integer& z) {
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * std::log(2.0);
  };
  return log_z(r.get_num()) - log_z(r.get_den());
}

HbarScalar HbarScalar::monomial(const Rational& c, int exponent) {
  HbarScalar s;
  s.add_term(exponent, c);
  return s;
}

Rational HbarScalar::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool HbarScalar::is_nonnegative() const {
  return terms_.empty() || terms_.begin()->first >= 0;
}

std::optional<int> HbarScalar::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> HbarScalar::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

void HbarScalar::add_term(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HbarScalar HbarScalar::shifted(int by) const {
  HbarScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k + by, c);
  return out;
}

HbarScalar HbarScalar::truncated_below(int order) const {
  HbarScalar out;
  for (const auto& [k, c] : terms_) {
    if (k >= order) break;
    out.terms_.emplace_hint(out.terms_.end(), k, c);
  }
  return out;
}

HbarScalar HbarScalar::divided_by(const HbarScalar& d) const {
  if (!d.is_monomial()) {
    throw ComputationError("division by a non-monomial hbar scalar " + d.to_string());
  }
  const auto& [dk, dc] = *d.terms_.begin();
  HbarScalar out;
  for (const auto& [k, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), k - dk, Rational(c / dc));
  return out;
}

HbarScalar& HbarScalar::operator+=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

HbarScalar& HbarScalar::operator-=(const HbarScalar& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

HbarScalar& HbarScalar::operator*=(const HbarScalar& o) {
  HbarScalar out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term(k1 + k2, c1 * c2);
  *this = std::move(out);
  return *this;
}

HbarScalar& HbarScalar::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

HbarScalar HbarScalar::operator-() const {
  HbarScalar out = *this;
  for (auto& [k, v] : out.terms_) v = -v;
  return out;
}

std::string HbarScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "h";
    if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
  }
  return os.str();
}

}  // namespace hbarkit
