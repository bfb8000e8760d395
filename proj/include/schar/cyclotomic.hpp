#pragma once

#include "schar/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace schar {

/// Element of a cyclotomic field Q(zeta_n), with zeta_n = exp(2*pi*i/n).
///
/// Values are stored as a sparse map exponent -> rational coefficient over a
/// fixed canonical basis of Q(zeta_n), and the conductor n is always minimal
/// for the value (in particular never congruent to 2 mod 4).  Two values are
/// equal as field elements iff their stored representations are identical, so
/// equality and zero tests are plain structural comparisons.
///
/// The basis is determined per prime power q = p^v dividing n, on the local
/// CRT exponent u of each power zeta_n^e:
///   - p odd:  the top base-p digit of u is at most p-2,
///   - p = 2:  u < q/2 (v >= 2; conductors 2 mod 4 are normalized away).
/// Exponent 0 belongs to the basis at every conductor, so a value is rational
/// iff exponent 0 is the only one present.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(const Rational& value);  // NOLINT: implicit by design
  Cyclotomic(long value);             // NOLINT: implicit by design

  /// zeta_n^e (e may be any integer, reduced mod n).
  static Cyclotomic root_of_unity(long n, long e);

  /// Sum of coeff * zeta_n^e over the given terms; canonicalized.
  static Cyclotomic from_terms(long n,
                               const std::vector<std::pair<long, Rational>>& terms);

  long conductor() const { return n_; }
  const std::map<long, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  bool is_real() const;
  std::optional<Rational> as_rational() const;

  /// Complex conjugation (zeta_n^e -> zeta_n^{n-e}).
  Cyclotomic conjugate() const;

  /// Galois automorphism zeta_n -> zeta_n^k; requires gcd(k, conductor) = 1.
  Cyclotomic galois(long k) const;

  /// Multiplicative inverse. Throws std::domain_error on zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);

  bool operator==(const Cyclotomic& rhs) const {
    return n_ == rhs.n_ && terms_ == rhs.terms_;
  }
  bool operator!=(const Cyclotomic& rhs) const { return !(*this == rhs); }

  /// Deterministic total order (conductor, then term list); used for sets.
  bool operator<(const Cyclotomic& rhs) const;

  std::string str() const;

 private:
  long n_ = 1;
  std::map<long, Rational> terms_;

  void reduce_(std::map<long, Rational>&& raw);
};

/// Sign of a real cyclotomic value: -1, 0 or +1.
/// Exact zero is decided syntactically; otherwise the value is boxed in an
/// MPFR interval refined by doubling precision until it excludes zero.
/// Throws std::domain_error if the value is not real.
int real_sign(const Cyclotomic& a);

/// Floor / ceiling of a real cyclotomic value as an exact integer.
Integer floor_to_integer(const Cyclotomic& a);
Integer ceil_to_integer(const Cyclotomic& a);

/// sign(a - b) for real a, b.
int compare_real(const Cyclotomic& a, const Cyclotomic& b);

}  // namespace schar
