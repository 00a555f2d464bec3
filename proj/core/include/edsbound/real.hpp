#pragma once

#include <mpfr.h>

#include <string>

#include "edsbound/rational.hpp"

namespace edsbound {

// Thin RAII wrapper over mpfr_t. Every arithmetic helper takes an explicit
// rounding mode so bound directions survive the whole computation; results
// carry the larger precision of the operands.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(Real o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static Real of(double d, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, d, MPFR_RNDN);
    return r;
  }
  static Real of_int(const Int& z, mpfr_prec_t prec,
                     mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), rnd);
    return r;
  }
  static Real of_rat(const Rat& q, mpfr_prec_t prec,
                     mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), rnd);
    return r;
  }
  static Real of_str(const std::string& s, mpfr_prec_t prec,
                     mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_str(r.v_, s.c_str(), 10, rnd);
    return r;
  }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

mpfr_prec_t result_prec(const Real& a, const Real& b);

Real add(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real sub(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real mul(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real div(const Real& a, const Real& b, mpfr_rnd_t rnd);
Real mul_d(const Real& a, double d, mpfr_rnd_t rnd);
Real div_ui(const Real& a, unsigned long d, mpfr_rnd_t rnd);
Real neg(const Real& a);
Real abs(const Real& a);
Real log(const Real& a, mpfr_rnd_t rnd);
Real exp(const Real& a, mpfr_rnd_t rnd);
Real sqrt(const Real& a, mpfr_rnd_t rnd);
Real pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd);
// a^(1/k)
Real root_ui(const Real& a, unsigned long k, mpfr_rnd_t rnd);
Real max(const Real& a, const Real& b);
Real min(const Real& a, const Real& b);

int cmp(const Real& a, const Real& b);
inline bool operator<(const Real& a, const Real& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Real& a, const Real& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Real& a, const Real& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Real& a, const Real& b) { return cmp(a, b) >= 0; }

// Decimal string, round-trip exact at the value's precision.
std::string to_decimal(const Real& a);

}  // namespace edsbound
