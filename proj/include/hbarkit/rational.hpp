#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hbarkit {

/// Exact rational number. GMP keeps every value canonical (gcd 1, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Raised when a computation cannot be carried out on its input.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw ComputationError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "p" or "p/q" (optional leading sign on p).
Rational parse_rational(std::string_view text);

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// m (m-1) ... (m-k+1); zero when k > m.
inline Integer falling_factorial(unsigned long m, unsigned long k) {
  if (k > m) return 0;
  Integer out = 1;
  for (unsigned long i = 0; i < k; ++i) out *= (m - i);
  return out;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

/// Natural log of |r| in double precision; r must be nonzero.
double log_abs(const Rational& r);

}  // namespace hbarkit
