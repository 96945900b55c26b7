#ifndef GARDING_RATIONAL_HPP
#define GARDING_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace garding {

// Exact coefficient field. mpq_class keeps values canonical (reduced,
// positive denominator) as long as construction goes through the helpers
// below; raw mpq_class(num, den) does not canonicalize on its own.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_of(const Integer& num, const Integer& den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q"; whitespace is not tolerated.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& q);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace garding

#endif
