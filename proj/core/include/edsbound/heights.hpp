#pragma once

#include "edsbound/curve.hpp"
#include "edsbound/real.hpp"

namespace edsbound {

// All heights are in natural-log units. The canonical height uses the
// half-normalization hhat(R) = (1/2) lim h(2^N R) / 4^N, so hhat(nR) = n^2 hhat(R)
// and |h(R) - 2 hhat(R)| <= C_E. Multiply by 2 to get the x-coordinate
// normalization common elsewhere.

// log max(|num|, den) for a lowest-terms rational; h(0) = 0.
Real naive_height(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

// h(x(P)); 0 at infinity. Throws PointNotOnCurve.
Real point_height(const WeierstrassCurve& e, const CurvePoint& p,
                  mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

// Height of (1 : g2 : g3) in P^2.
Real projective_height_g(const Rat& g2, const Rat& g3, mpfr_prec_t prec,
                         mpfr_rnd_t rnd = MPFR_RNDN);

// max(0, log|x|)
Real h_infinity(const Rat& x, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN);

struct HeightEnclosure {
  Real lower;  // rounded down
  Real upper;  // rounded up
  unsigned doublings_used = 0;
  Real c_e_used;
};

// Certified interval containing hhat(P): with R = 2^N P,
//   [(h(R) - C_E) / (2*4^N), (h(R) + C_E) / (2*4^N)],
// N minimal with C_E / 4^N <= target_width. Endpoints rounded outward.
// Throws TorsionPoint, WidthUnreachable.
HeightEnclosure canonical_height_enclosure(const WeierstrassCurve& e,
                                           const CurvePoint& p,
                                           double target_width, const Real& c_e,
                                           mpfr_prec_t prec,
                                           unsigned max_doublings = 12);

// Same enclosure at a caller-fixed doubling count.
HeightEnclosure enclosure_at_doublings(const WeierstrassCurve& e,
                                       const CurvePoint& p, unsigned doublings,
                                       const Real& c_e, mpfr_prec_t prec);

}  // namespace edsbound
