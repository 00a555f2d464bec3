#include "edsbound/heights.hpp"

namespace edsbound {

Real naive_height(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Int n = ::abs(x.get_num());
  const Int& d = x.get_den();
  const Int& m = n >= d ? n : d;
  if (m <= 1) return Real(prec);  // log 1 = 0
  return log(Real::of_int(m, prec, rnd), rnd);
}

Real point_height(const WeierstrassCurve& e, const CurvePoint& p,
                  mpfr_prec_t prec, mpfr_rnd_t rnd) {
  if (!on_curve(e, p)) throw PointNotOnCurve("height of a point off the curve");
  if (p.infinity) return Real(prec);
  return naive_height(p.x, prec, rnd);
}

Real projective_height_g(const Rat& g2, const Rat& g3, mpfr_prec_t prec,
                         mpfr_rnd_t rnd) {
  Int l;
  mpz_lcm(l.get_mpz_t(), g2.get_den().get_mpz_t(), g3.get_den().get_mpz_t());
  Int c0 = l;
  Int c2 = g2.get_num() * (l / g2.get_den());
  Int c3 = g3.get_num() * (l / g3.get_den());
  Int g;
  mpz_gcd(g.get_mpz_t(), c0.get_mpz_t(), c2.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c3.get_mpz_t());
  c0 /= g;
  c2 /= g;
  c3 /= g;
  Int m = std::max(std::max(Int(::abs(c0)), Int(::abs(c2))), Int(::abs(c3)));
  if (m <= 1) return Real(prec);
  return log(Real::of_int(m, prec, rnd), rnd);
}

Real h_infinity(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd) {
  Int n = ::abs(x.get_num());
  if (n <= x.get_den()) return Real(prec);  // |x| <= 1
  Rat ax(n, x.get_den());
  return log(Real::of_rat(ax, prec, rnd), rnd);
}

HeightEnclosure enclosure_at_doublings(const WeierstrassCurve& e,
                                       const CurvePoint& p, unsigned doublings,
                                       const Real& c_e, mpfr_prec_t prec) {
  CurvePoint r = p;
  for (unsigned i = 0; i < doublings; ++i) r = point_add(e, r, r);
  unsigned long scale = 2;  // 2 * 4^N
  for (unsigned i = 0; i < doublings; ++i) scale *= 4;

  Real h_lo = point_height(e, r, prec, MPFR_RNDD);
  Real h_hi = point_height(e, r, prec, MPFR_RNDU);

  HeightEnclosure out{Real(prec), Real(prec), doublings, c_e};
  out.lower = div_ui(sub(h_lo, c_e, MPFR_RNDD), scale, MPFR_RNDD);
  out.upper = div_ui(add(h_hi, c_e, MPFR_RNDU), scale, MPFR_RNDU);
  return out;
}

HeightEnclosure canonical_height_enclosure(const WeierstrassCurve& e,
                                           const CurvePoint& p,
                                           double target_width, const Real& c_e,
                                           mpfr_prec_t prec,
                                           unsigned max_doublings) {
  auto tor = is_torsion(e, p);
  if (tor.is_torsion) throw TorsionPoint("enclosure of a torsion point");

  // smallest N with C_E / 4^N <= target_width
  Real width = c_e;
  unsigned n = 0;
  Real target = Real::of(target_width, prec);
  while (cmp(width, target) > 0) {
    if (n >= max_doublings) {
      throw WidthUnreachable("doubling cap reached before target width");
    }
    ++n;
    width = div_ui(width, 4, MPFR_RNDU);
  }
  return enclosure_at_doublings(e, p, n, c_e, prec);
}

}  // namespace edsbound
