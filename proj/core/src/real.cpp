#include "edsbound/real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace edsbound {

mpfr_prec_t result_prec(const Real& a, const Real& b) {
  return std::max(a.prec(), b.prec());
}

#define EDS_BINOP(name, fn)                                  \
  Real name(const Real& a, const Real& b, mpfr_rnd_t rnd) {  \
    Real r(result_prec(a, b));                               \
    fn(r.raw(), a.raw(), b.raw(), rnd);                      \
    return r;                                                \
  }

EDS_BINOP(add, mpfr_add)
EDS_BINOP(sub, mpfr_sub)
EDS_BINOP(mul, mpfr_mul)
EDS_BINOP(div, mpfr_div)
#undef EDS_BINOP

Real mul_d(const Real& a, double d, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_mul_d(r.raw(), a.raw(), d, rnd);
  return r;
}

Real div_ui(const Real& a, unsigned long d, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_div_ui(r.raw(), a.raw(), d, rnd);
  return r;
}

Real neg(const Real& a) {
  Real r(a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

#define EDS_UNOP(name, fn)                     \
  Real name(const Real& a, mpfr_rnd_t rnd) {   \
    Real r(a.prec());                          \
    fn(r.raw(), a.raw(), rnd);                 \
    return r;                                  \
  }

EDS_UNOP(log, mpfr_log)
EDS_UNOP(exp, mpfr_exp)
EDS_UNOP(sqrt, mpfr_sqrt)
#undef EDS_UNOP

Real pow_ui(const Real& a, unsigned long e, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_pow_ui(r.raw(), a.raw(), e, rnd);
  return r;
}

Real root_ui(const Real& a, unsigned long k, mpfr_rnd_t rnd) {
  Real r(a.prec());
  mpfr_rootn_ui(r.raw(), a.raw(), k, rnd);
  return r;
}

Real max(const Real& a, const Real& b) { return cmp(a, b) >= 0 ? a : b; }
Real min(const Real& a, const Real& b) { return cmp(a, b) <= 0 ? a : b; }

int cmp(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()); }

std::string to_decimal(const Real& a) {
  // enough digits to round-trip at this precision
  size_t digits = static_cast<size_t>(a.prec() * 0.30103) + 3;
  char fmt[32];
  std::snprintf(fmt, sizeof(fmt), "%%.%zuRg", digits);
  char* out = nullptr;
  mpfr_asprintf(&out, fmt, a.raw());
  std::string s(out);
  mpfr_free_str(out);
  return s;
}

}  // namespace edsbound
