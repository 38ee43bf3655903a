#pragma once

// Exact scalar types. Every coefficient in the library is an mpq_class kept
// in canonical form (lowest terms, positive denominator, zero as 0/1).

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace planar_gw {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Renders "p/q", or just "p" when the denominator is 1. Never uses
/// exponent notation or locale grouping.
std::string to_string(const Rational& x);
std::string to_string(const BigInt& x);

/// Parses "p/q" or "p" (optional leading '-'). The result is canonicalized;
/// malformed input or a zero denominator throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// p/q in canonical form. mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q) {
  if (q == 0) throw std::invalid_argument("ratio: zero denominator");
  Rational x(p, q);
  x.canonicalize();
  return x;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

}  // namespace planar_gw
