#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dpcyl {

using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "-p", "p/q"; rejects decimal literals, exponents and zero denominators.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form, or "p" for integers.
std::string to_string(const Rational& value);

// p/q in lowest terms with a positive denominator; q must be non-zero.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace dpcyl
