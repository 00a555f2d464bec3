#pragma once

#include <complex>

#include "edsbound/curve.hpp"

namespace edsbound {

// Period lattice of E' : y^2 = 4x^3 - g2 x - g3, basis chosen with tau1 real,
// tau = tau2/tau1 in the fundamental domain (|tau| >= 1, |Re tau| <= 1/2).
struct LatticeData {
  double tau1 = 0;  // real period, > 0
  std::complex<double> tau2;
  std::complex<double> tau;
  double im_tau = 0;
};

// AGM period computation, both discriminant signs. Throws SingularCurve.
LatticeData periods(const ShortCurve& s);

struct TauBoundsReport {
  bool pass = false;
  double abs_tau = 0;
  double abs_tau_bound = 0;  // 5.7 + log+ |j|
  double im_tau = 0;
  double im_tau_floor = 0;  // sqrt(3)/2
};

TauBoundsReport verify_tau_bounds(const LatticeData& lat, double j_abs);

// max(h, 3*pi / (D * Im tau)); never exceeds the closed form max(h, 11/D).
double exact_log_v1(const LatticeData& lat, double h, unsigned degree);

}  // namespace edsbound
