#include "edsbound/constants.hpp"

#include <cmath>

namespace edsbound {

namespace {

Real real_ui(unsigned long v, mpfr_prec_t prec) {
  Real r(prec);
  mpfr_set_ui(r.raw(), v, MPFR_RNDN);
  return r;
}

Int disc_integer(const WeierstrassCurve& e) {
  Int d = ::abs(e.disc.get_num());
  return d;
}

}  // namespace

Real compute_c_e(const WeierstrassCurve& e, mpfr_prec_t prec) {
  Real out = Real::of(literals::height_diff_base, prec);
  out = add(out, div_ui(naive_height(e.j_inv, prec, MPFR_RNDU), 12, MPFR_RNDU),
            MPFR_RNDU);
  out = add(out, div_ui(naive_height(e.disc, prec, MPFR_RNDU), 6, MPFR_RNDU),
            MPFR_RNDU);
  out = add(out, div_ui(h_infinity(e.j_inv, prec, MPFR_RNDU), 6, MPFR_RNDU),
            MPFR_RNDU);
  out = add(out, h_infinity(e.b2 / 12, prec, MPFR_RNDU), MPFR_RNDU);
  return out;
}

std::pair<Real, Real> compute_sigma_je(const AnalysisInput& in,
                                       mpfr_prec_t prec) {
  Int delta = disc_integer(in.curve);
  if (in.conductor <= 1) throw BadConductor("conductor must exceed 1");
  if (delta <= 1) throw BadConductor("|discriminant| must exceed 1");
  if (!mpz_divisible_p(delta.get_mpz_t(), in.conductor.get_mpz_t())) {
    throw BadConductor("conductor does not divide the discriminant integer");
  }
  auto cf = bounded_factor(in.conductor);
  if (!cf.complete) throw BadConductor("conductor does not factor at this effort");
  for (const auto& f : cf.factors) {
    if (!mpz_divisible_p(delta.get_mpz_t(), f.prime.get_mpz_t())) {
      throw BadConductor("conductor prime " + f.prime.get_str() +
                         " does not divide the discriminant");
    }
  }

  Real log_delta = log(Real::of_int(delta, prec), MPFR_RNDN);
  Real log_cond = log(Real::of_int(in.conductor, prec), MPFR_RNDN);
  Real sigma = div(log_delta, log_cond, MPFR_RNDN);

  // J_E is a lower bound: numerator down, denominator up.
  Real num = log(Real::of_int(delta, prec, MPFR_RNDD), MPFR_RNDD);
  Real sig_up = div(log(Real::of_int(delta, prec, MPFR_RNDU), MPFR_RNDU),
                    log(Real::of_int(in.conductor, prec, MPFR_RNDD), MPFR_RNDD),
                    MPFR_RNDU);
  unsigned long d = in.degree;
  Real arg = mul_d(mul(pow_ui(sig_up, 2, MPFR_RNDU),
                       real_ui(d, prec), MPFR_RNDU),
                   literals::lang_log_factor, MPFR_RNDU);
  Real log2arg = pow_ui(log(arg, MPFR_RNDU), 2, MPFR_RNDU);
  Real denom = mul_d(mul(mul(pow_ui(real_ui(d, prec), 3, MPFR_RNDU),
                             pow_ui(sig_up, 6, MPFR_RNDU), MPFR_RNDU),
                         log2arg, MPFR_RNDU),
                     literals::lang_scale, MPFR_RNDU);
  Real j_e = div(num, denom, MPFR_RNDD);
  return {sigma, j_e};
}

std::pair<std::vector<Int>, unsigned> compute_s_set(const AnalysisInput& in) {
  std::vector<Int> s;
  s.push_back(Int(2));
  if (!in.asserted_minimal) {
    s.push_back(Int(3));
    // candidates for non-minimality: p^4 | c4 and p^12 | Delta
    Int delta = disc_integer(in.curve);
    Int c4 = ::abs(in.curve.c4.get_num());
    auto df = bounded_factor(delta);
    for (const auto& f : df.factors) {
      if (f.prime < 5 || f.exponent < 12) continue;
      Int p4 = f.prime * f.prime * f.prime * f.prime;
      if (mpz_divisible_p(c4.get_mpz_t(), p4.get_mpz_t())) {
        s.push_back(f.prime);
      }
    }
  }
  return {s, static_cast<unsigned>(s.size())};
}

namespace {

// Shared pieces of the two D_1 readings.
struct D1Pieces {
  Real p_pow;   // P(Delta)^(log2 D + 1)
  Real m;       // max(4, log2 H(j))
  Real p_deg;   // P(Delta)^D
};

D1Pieces d1_pieces(const WeierstrassCurve& e, unsigned degree,
                   mpfr_prec_t prec) {
  Int delta = disc_integer(e);
  if (delta <= 1) throw FactorizationIncomplete("|Delta| must exceed 1");
  auto f = bounded_factor(delta);
  if (!f.complete) {
    throw FactorizationIncomplete("discriminant does not factor at this effort");
  }
  Int p_delta = f.factors.back().prime;  // largest prime of |Delta|

  Real p = Real::of_int(p_delta, prec, MPFR_RNDU);
  D1Pieces out{Real(prec), Real(prec), Real(prec)};
  {
    double log2d = std::log2(double(degree));
    Real expo = Real::of(log2d + 1.0, prec);
    mpfr_pow(out.p_pow.raw(), p.raw(), expo.raw(), MPFR_RNDU);
  }
  Real log2h = div(naive_height(e.j_inv, prec, MPFR_RNDU),
                   log(real_ui(2, prec), MPFR_RNDD), MPFR_RNDU);
  out.m = max(real_ui(4, prec), log2h);
  out.p_deg = pow_ui(p, degree, MPFR_RNDU);
  return out;
}

}  // namespace

std::pair<Real, Real> compute_d1_d2(const WeierstrassCurve& e, unsigned degree,
                                    mpfr_prec_t prec) {
  auto pcs = d1_pieces(e, degree, prec);
  Real tail = add(mul_d(pcs.p_deg, 2.0, MPFR_RNDU), real_ui(1, prec), MPFR_RNDU);
  Real inner = mul(mul(pcs.p_pow, pcs.m, MPFR_RNDU), tail, MPFR_RNDU);
  Real d1 = mul_d(pow_ui(inner, 2, MPFR_RNDU), 2.0, MPFR_RNDU);
  Real d2 = compute_c_e(e, prec);
  return {d1, d2};
}

Real compute_d1_variant(const WeierstrassCurve& e, unsigned degree,
                        mpfr_prec_t prec) {
  auto pcs = d1_pieces(e, degree, prec);
  Real tail = mul_d(pcs.p_deg, 2.0, MPFR_RNDU);
  Real inner = mul(mul(pcs.p_pow, pcs.m, MPFR_RNDU), tail, MPFR_RNDU);
  return pow_ui(inner, 2, MPFR_RNDU);
}

namespace {

// Largest absolute value among the complex roots of 4x^3 - g2 x - g3.
// Long-double closed forms plus Newton polish on real roots.
double max_abs_root(double g2, double g3) {
  const long double cp = -static_cast<long double>(g2) / 4;
  const long double cq = -static_cast<long double>(g3) / 4;
  if (cp == 0 && cq == 0) return 0.0;

  auto polish = [&](long double x) {
    for (int i = 0; i < 40; ++i) {
      long double fv = (x * x + cp) * x + cq;
      long double dv = 3 * x * x + cp;
      if (dv == 0) break;
      long double nx = x - fv / dv;
      if (nx == x) break;
      x = nx;
    }
    return x;
  };

  const long double disc = -4 * cp * cp * cp - 27 * cq * cq;
  long double m = 0;
  if (disc >= 0 && cp < 0) {
    long double r = 2 * sqrtl(-cp / 3);
    long double arg = 3 * cq / (2 * cp) * sqrtl(-3 / cp);
    if (arg > 1) arg = 1;
    if (arg < -1) arg = -1;
    long double th = acosl(arg);
    for (int k = 0; k < 3; ++k) {
      long double x = polish(r * cosl((th - 2 * M_PIl * k) / 3));
      m = std::max(m, fabsl(x));
    }
  } else if (disc >= 0) {
    // cp >= 0 with disc >= 0 forces cp = 0: roots of x^3 = -cq
    m = cbrtl(fabsl(cq));
  } else {
    // one real root, complex pair of squared modulus r0^2 + cp
    long double half = cq / 2;
    long double s = sqrtl(half * half + cp * cp * cp / 27);
    long double r0 = cbrtl(-half + s) + cbrtl(-half - s);
    r0 = polish(r0);
    m = std::max(fabsl(r0), sqrtl(r0 * r0 + cp));
  }
  return static_cast<double>(m);
}

}  // namespace

std::pair<Real, Real> compute_c4(const ShortCurve& s, const WeierstrassCurve& e,
                                 mpfr_prec_t prec) {
  double g2 = Real::of_rat(s.g2, 64).to_double();
  double g3 = Real::of_rat(s.g3, 64).to_double();
  double m = max_abs_root(g2, g3) * (1.0 + 1e-9);
  double cauchy =
      1.0 + std::max(std::abs(g2) / 4.0, std::abs(g3) / 4.0);
  if (!(m <= cauchy)) m = cauchy;  // numeric fallback, still a valid bound
  Real x_t = Real::of(m, prec);

  Rat lin = ::abs(e.a1 * e.a1 / 12) + ::abs(e.a2 / 3);
  Real c4 = max(Real::of_rat(lin, prec, MPFR_RNDU),
                mul_d(x_t, 2.0, MPFR_RNDU));
  return {c4, x_t};
}

HVB compute_h_v_b(const ShortCurve& s, const WeierstrassCurve& e,
                  unsigned degree, mpfr_prec_t prec, ConstantsMode mode,
                  const std::optional<LatticeData>& lat) {
  HVB out{Real(prec), Real(prec), Real(prec), Real(prec)};
  Real one = real_ui(1, prec);
  Real h = max(one, max(projective_height_g(s.g2, s.g3, prec, MPFR_RNDU),
                        naive_height(e.j_inv, prec, MPFR_RNDU)));
  out.h_triple = h;

  Real v_over_d = Real::of(literals::v_bound_factor / degree, prec);
  out.log_v1 = max(h, v_over_d);
  if (mode == ConstantsMode::Analytic && lat.has_value()) {
    double tight = exact_log_v1(*lat, h.to_double(), degree) * (1.0 + 1e-12);
    out.log_v1 = min(out.log_v1, Real::of(tight, prec));
  }

  Real logj = h_infinity(e.j_inv, prec, MPFR_RNDU);
  Real zb = add(Real::of(literals::z_over_tau_base, prec), logj, MPFR_RNDU);
  out.log_v2_prime = max(h, mul(v_over_d, pow_ui(zb, 2, MPFR_RNDU), MPFR_RNDU));

  Real eh = mul(h, exp(one, MPFR_RNDU), MPFR_RNDU);
  Real logd = log(real_ui(degree, prec), MPFR_RNDU);
  out.log_b_prime = max(max(eh, div_ui(out.log_v1, degree, MPFR_RNDU)),
                        max(div_ui(out.log_v2_prime, degree, MPFR_RNDU), logd));
  return out;
}

ConstantsReport analyze(const AnalysisInput& in, const HeightEnclosure& hhat,
                        mpfr_prec_t prec, ConstantsMode mode) {
  ConstantsReport r;
  r.mode = mode;
  r.prec = prec;
  r.hhat_lower = hhat.lower;
  r.hhat_upper = hhat.upper;

  r.c_e = compute_c_e(in.curve, prec);
  auto [sigma, j_e] = compute_sigma_je(in, prec);
  r.sigma = sigma;
  r.j_e = j_e;
  auto [s_primes, s_count] = compute_s_set(in);
  r.s_primes = s_primes;
  r.s = s_count;
  auto [d1, d2] = compute_d1_d2(in.curve, in.degree, prec);
  r.d_1 = d1;
  r.d_2 = d2;
  r.d_1_variant = compute_d1_variant(in.curve, in.degree, prec);

  ShortCurve sc = to_short_form(in.curve);
  auto [c4, x_t] = compute_c4(sc, in.curve, prec);
  r.c_4 = c4;
  r.x_t_bound = x_t;

  std::optional<LatticeData> lat;
  if (mode == ConstantsMode::Analytic) lat = periods(sc);
  HVB hvb = compute_h_v_b(sc, in.curve, in.degree, prec, mode, lat);
  r.h_triple = hvb.h_triple;
  r.log_v1 = hvb.log_v1;
  r.log_v2_prime = hvb.log_v2_prime;
  r.log_b_prime = hvb.log_b_prime;

  Real d6 = pow_ui(real_ui(in.degree, prec), 6, MPFR_RNDU);
  r.c_3 = mul(mul_d(d6, literals::c3_scale, MPFR_RNDU),
              mul(r.log_v1, pow_ui(r.log_b_prime, 4, MPFR_RNDU), MPFR_RNDU),
              MPFR_RNDU);
  r.c_2 = mul(r.c_3, max(r.log_v2_prime, r.hhat_upper), MPFR_RNDU);
  r.c_big = add(mul(r.hhat_upper, r.d_1, MPFR_RNDU), r.d_2, MPFR_RNDU);

  // C_5 = J_E^-1 (4 + 2 C_E + 2 s D_2 + log C_4) + 2 s D_1
  //       + 2 C_3 max(log V_2' / J_E, 1)
  Real je_inv = div(real_ui(1, prec), r.j_e, MPFR_RNDU);
  Real bracket = add(real_ui(4, prec), mul_d(r.c_e, 2.0, MPFR_RNDU), MPFR_RNDU);
  bracket = add(bracket, mul_d(r.d_2, 2.0 * r.s, MPFR_RNDU), MPFR_RNDU);
  bracket = add(bracket, log(r.c_4, MPFR_RNDU), MPFR_RNDU);
  Real tail = mul_d(mul(r.c_3,
                        max(div(r.log_v2_prime, r.j_e, MPFR_RNDU),
                            real_ui(1, prec)),
                        MPFR_RNDU),
                    2.0, MPFR_RNDU);
  r.c_5 = add(add(mul(je_inv, bracket, MPFR_RNDU),
                  mul_d(r.d_1, 2.0 * r.s, MPFR_RNDU), MPFR_RNDU),
              tail, MPFR_RNDU);

  Real c5_23 = pow_ui(root_ui(r.c_5, 3, MPFR_RNDU), 2, MPFR_RNDU);
  Real expo = exp(div_ui(r.hhat_upper, in.degree, MPFR_RNDU), MPFR_RNDU);
  r.k_bound = max(c5_23, expo);
  return r;
}

Real rhs_lemma_divprim(uint64_t n, const Real& hhat_lower, const Real& c_e,
                       unsigned s, const Real& c_big) {
  mpfr_prec_t prec = hhat_lower.prec();
  Real n2 = mul(Real::of(double(n), prec), Real::of(double(n), prec), MPFR_RNDN);
  Real main = mul_d(mul(mul(hhat_lower, n2, MPFR_RNDN),
                        Real::of(1.0 - rho(n), prec), MPFR_RNDN),
                    2.0, MPFR_RNDN);
  Real logn = log(Real::of(double(n), prec), MPFR_RNDN);
  unsigned w = omega(Int(static_cast<unsigned long>(n)));
  Real out = sub(main, mul_d(logn, 2.0, MPFR_RNDN), MPFR_RNDN);
  out = sub(out, mul_d(c_e, double(w) + 1.0, MPFR_RNDN), MPFR_RNDN);
  out = sub(out, mul_d(c_big, double(s), MPFR_RNDN), MPFR_RNDN);
  return out;
}

}  // namespace edsbound
