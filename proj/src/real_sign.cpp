#include <mpfr.h>

#include <stdexcept>

#include "schar/cyclotomic.hpp"

namespace schar {

namespace detail {
int real_sign_assume_real(const Cyclotomic& a);
}

namespace {

constexpr mpfr_prec_t kMaxPrec = 1 << 22;

// Fill [lo, hi] with an enclosure of sum c * cos(2*pi*e/n) at the working
// precision of lo/hi. cos is bounded via its value at the lower argument
// endpoint inflated by the argument width (Lipschitz constant 1).
void eval_interval(const Cyclotomic& a, mpfr_t lo, mpfr_t hi) {
  mpfr_prec_t prec = mpfr_get_prec(lo);
  mpfr_t pi_lo, pi_hi, t_lo, t_hi, r, y_lo, y_hi, tmp;
  mpfr_inits2(prec, pi_lo, pi_hi, t_lo, t_hi, r, y_lo, y_hi, tmp,
              (mpfr_ptr) nullptr);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  mpfr_set_zero(lo, 1);
  mpfr_set_zero(hi, 1);
  long n = a.conductor();
  for (const auto& [e, c] : a.terms()) {
    mpfr_mul_si(t_lo, pi_lo, 2 * e, MPFR_RNDD);
    mpfr_div_si(t_lo, t_lo, n, MPFR_RNDD);
    mpfr_mul_si(t_hi, pi_hi, 2 * e, MPFR_RNDU);
    mpfr_div_si(t_hi, t_hi, n, MPFR_RNDU);
    mpfr_sub(r, t_hi, t_lo, MPFR_RNDU);
    mpfr_cos(y_lo, t_lo, MPFR_RNDD);
    mpfr_cos(y_hi, t_lo, MPFR_RNDU);
    mpfr_sub(y_lo, y_lo, r, MPFR_RNDD);
    mpfr_add(y_hi, y_hi, r, MPFR_RNDU);
    if (sgn(c) >= 0) {
      mpfr_mul_q(tmp, y_lo, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, tmp, MPFR_RNDD);
      mpfr_mul_q(tmp, y_hi, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, tmp, MPFR_RNDU);
    } else {
      mpfr_mul_q(tmp, y_hi, c.get_mpq_t(), MPFR_RNDD);
      mpfr_add(lo, lo, tmp, MPFR_RNDD);
      mpfr_mul_q(tmp, y_lo, c.get_mpq_t(), MPFR_RNDU);
      mpfr_add(hi, hi, tmp, MPFR_RNDU);
    }
  }
  mpfr_clears(pi_lo, pi_hi, t_lo, t_hi, r, y_lo, y_hi, tmp, (mpfr_ptr) nullptr);
}

}  // namespace

int detail::real_sign_assume_real(const Cyclotomic& a) {
  if (a.is_zero()) return 0;
  if (auto q = a.as_rational()) return sgn(*q);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    if (prec > kMaxPrec)
      throw std::runtime_error("real_sign failed to separate value from zero");
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, (mpfr_ptr) nullptr);
    eval_interval(a, lo, hi);
    int result = 2;
    if (mpfr_sgn(lo) > 0)
      result = 1;
    else if (mpfr_sgn(hi) < 0)
      result = -1;
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (result != 2) return result;
  }
}

int real_sign(const Cyclotomic& a) {
  if (a.is_zero()) return 0;
  if (auto q = a.as_rational()) return sgn(*q);
  if (!a.is_real()) throw std::domain_error("real_sign requires a real value");
  return detail::real_sign_assume_real(a);
}

Integer floor_to_integer(const Cyclotomic& a) {
  if (auto q = a.as_rational()) return floor_to_integer(*q);
  for (mpfr_prec_t prec = 64;; prec *= 2) {
    if (prec > kMaxPrec)
      throw std::runtime_error("floor failed to converge");
    mpfr_t lo, hi;
    mpfr_inits2(prec, lo, hi, (mpfr_ptr) nullptr);
    eval_interval(a, lo, hi);
    Integer zl, zh;
    mpfr_get_z(zl.get_mpz_t(), lo, MPFR_RNDD);
    mpfr_get_z(zh.get_mpz_t(), hi, MPFR_RNDD);
    mpfr_clears(lo, hi, (mpfr_ptr) nullptr);
    if (zl == zh) return zl;
  }
}

Integer ceil_to_integer(const Cyclotomic& a) {
  if (auto q = a.as_rational()) return ceil_to_integer(*q);
  return -floor_to_integer(-a);
}

}  // namespace schar
