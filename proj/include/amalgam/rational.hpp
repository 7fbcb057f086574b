#pragma once

#include <gmpxx.h>

#include <string>

namespace amalgam {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(num, den) does not canonicalize on its own.
inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// "num/den" with positive denominator; plain "num" when den == 1.
std::string to_fraction_string(const Rational& q);

// Inverse of to_fraction_string (also accepts plain integers).
Rational fraction_from_string(const std::string& text);

}  // namespace amalgam
