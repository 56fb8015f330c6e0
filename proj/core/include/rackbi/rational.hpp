#pragma once

#include <gmpxx.h>

#include <string>

namespace rackbi {

/// Exact rational scalar. All arithmetic in the library is performed over
/// this field; nothing is ever rounded.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// num/den in canonical form (the raw two-argument mpq constructor does not
/// reduce, which breaks exact comparison).
inline Rational ratio(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p/q" or "p" (optional sign, q > 0 after canonicalization).
/// Throws Error{ParseError} on malformed input or zero denominator.
Rational rat_parse(const std::string& text);

/// Canonical form "p/q" with explicit denominator, e.g. "-3/2", "5/1".
std::string rat_str(const Rational& q);

mpz_class factorial(int n);

/// Binomial coefficient as an exact rational (n choose k), zero for k < 0
/// or k > n.
Rational binomial(int n, int k);

}  // namespace rackbi
