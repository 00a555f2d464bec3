#include "edsbound/lattice.hpp"

#include <cmath>

#include "edsbound/literals.hpp"
#include "edsbound/real.hpp"

namespace edsbound {

namespace {

long double agm(long double a, long double b) {
  for (int i = 0; i < 200; ++i) {
    long double an = (a + b) / 2;
    long double bn = sqrtl(a * b);
    if (fabsl(an - bn) <= 1e-24L * fabsl(an)) return an;
    a = an;
    b = bn;
  }
  return (a + b) / 2;
}

long double newton_root(long double x, long double cp, long double cq) {
  for (int i = 0; i < 60; ++i) {
    long double fv = (x * x + cp) * x + cq;
    long double dv = 3 * x * x + cp;
    if (dv == 0) break;
    long double nx = x - fv / dv;
    if (nx == x) break;
    x = nx;
  }
  return x;
}

}  // namespace

LatticeData periods(const ShortCurve& s) {
  long double g2 = Real::of_rat(s.g2, 96).to_double();
  long double g3 = Real::of_rat(s.g3, 96).to_double();
  long double disc = g2 * g2 * g2 - 27 * g3 * g3;
  if (disc == 0) throw SingularCurve("short model has zero discriminant");

  // monic cubic x^3 + cp x + cq with the same roots as 4x^3 - g2 x - g3
  long double cp = -g2 / 4;
  long double cq = -g3 / 4;
  const long double pi = M_PIl;

  long double t1;
  std::complex<long double> t2;
  if (disc > 0) {
    // three real roots e1 > e2 > e3
    long double r = 2 * sqrtl(-cp / 3);
    long double arg = 3 * cq / (2 * cp) * sqrtl(-3 / cp);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    long double th = acosl(arg);
    long double e[3];
    for (int k = 0; k < 3; ++k) {
      e[k] = newton_root(r * cosl((th - 2 * pi * k) / 3), cp, cq);
    }
    std::sort(e, e + 3, std::greater<>());
    t1 = pi / agm(sqrtl(e[0] - e[2]), sqrtl(e[0] - e[1]));
    t2 = {0.0L, pi / agm(sqrtl(e[0] - e[2]), sqrtl(e[1] - e[2]))};
  } else {
    // one real root r0; complex pair has modulus sqrt(r0^2 + cp)
    long double half = cq / 2;
    long double sq = sqrtl(half * half + cp * cp * cp / 27);
    long double r0 = newton_root(cbrtl(-half + sq) + cbrtl(-half - sq), cp, cq);
    long double b = sqrtl(3 * r0 * r0 / 4 + cp);
    long double big_m = sqrtl(9 * r0 * r0 / 4 + b * b);
    long double omega = 2 * pi / agm(2 * sqrtl(big_m), sqrtl(2 * big_m + 3 * r0));
    long double omega2 = 2 * pi / agm(2 * sqrtl(big_m), sqrtl(2 * big_m - 3 * r0));
    t1 = omega;
    t2 = {omega / 2, omega2 / 2};
  }

  std::complex<long double> tau = t2 / std::complex<long double>(t1, 0.0L);
  if (tau.imag() < 0) tau = -tau;
  // reduce to |Re tau| <= 1/2, |tau| >= 1
  for (int i = 0; i < 200; ++i) {
    tau = {tau.real() - roundl(tau.real()), tau.imag()};
    if (std::norm(tau) < 1.0L) {
      tau = -1.0L / tau;
    } else {
      break;
    }
  }

  LatticeData out;
  out.tau1 = static_cast<double>(t1);
  out.tau2 = {static_cast<double>(t2.real()), static_cast<double>(t2.imag())};
  out.tau = {static_cast<double>(tau.real()), static_cast<double>(tau.imag())};
  out.im_tau = static_cast<double>(tau.imag());
  return out;
}

TauBoundsReport verify_tau_bounds(const LatticeData& lat, double j_abs) {
  TauBoundsReport r;
  r.abs_tau = std::abs(lat.tau);
  r.abs_tau_bound = literals::abs_tau_base + std::max(0.0, std::log(j_abs));
  r.im_tau = lat.im_tau;
  r.im_tau_floor = std::sqrt(3.0) / 2.0;
  r.pass = r.abs_tau >= 1.0 - 1e-12 && r.im_tau > r.im_tau_floor - 1e-12 &&
           r.abs_tau <= r.abs_tau_bound + 1e-9;
  return r;
}

double exact_log_v1(const LatticeData& lat, double h, unsigned degree) {
  return std::max(h, 3.0 * M_PI / (degree * std::abs(lat.im_tau)));
}

}  // namespace edsbound
