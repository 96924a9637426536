#pragma once

#include <gmpxx.h>

#include <string>

namespace wreath {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(n, d) does not reduce; every two-argument construction goes here.
inline Rational frac(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace wreath
