#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubicfold {

/// Arbitrary-precision rational. GMP keeps results of arithmetic canonical
/// (reduced, positive denominator); values built from a numerator and a
/// denominator must go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline Rational inverse(const Rational& q) {
  if (is_zero(q)) throw std::domain_error("inversion of zero");
  return 1 / q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a" or "a/b" with optional leading sign.
inline Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace cubicfold
