#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace schar {

using Integer = mpz_class;

/// Exact rational number. Always kept in canonical form: gcd(num, den) = 1,
/// den > 0. Backed by GMP.
using Rational = mpq_class;

inline int sign_of(const Rational& q) { return sgn(q); }

/// Parse "a" or "a/b" with optional leading minus. Throws std::invalid_argument
/// on malformed input or zero denominator.
inline Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

inline std::string rational_to_string(const Rational& q) {
  return q.get_str();
}

inline Integer floor_to_integer(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_to_integer(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace schar
