#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace va {

/// Exact rational number. GMP keeps the value canonical: lowest terms,
/// positive denominator, zero stored as 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

using VectorQ = std::vector<Rational>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

Integer factorial(unsigned k);
Integer binomial(unsigned n, unsigned k);

/// Least common multiple of all denominators in `v` (1 for an empty vector).
Integer denominator_lcm(const VectorQ& v);

}  // namespace va
