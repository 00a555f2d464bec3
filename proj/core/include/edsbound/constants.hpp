#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "edsbound/curve.hpp"
#include "edsbound/eds.hpp"
#include "edsbound/heights.hpp"
#include "edsbound/lattice.hpp"
#include "edsbound/literals.hpp"

namespace edsbound {

enum class ConstantsMode { ClosedForm, Analytic };

struct AnalysisInput {
  WeierstrassCurve curve;
  CurvePoint point;
  Int conductor;
  unsigned degree = 1;  // formulas keep D explicit; exercised at D = 1
  bool asserted_minimal = false;
};

struct ConstantsReport {
  ConstantsMode mode = ConstantsMode::ClosedForm;
  mpfr_prec_t prec = 128;

  Real c_e;       // rounded up
  Real sigma;     // log|Delta| / log(conductor)
  Real j_e;       // rounded down (lower bound for hhat)
  std::vector<Int> s_primes;
  unsigned s = 0;
  Real d_1, d_2;  // d_2 = c_e
  Real d_1_variant;  // smaller closed-form reading of D_1, diagnostics only
  Real c_big;     // C = hhat_upper * D_1 + D_2
  Real h_triple;  // max(1, h(1,g2,g3), h(j))
  Real log_v1;
  Real log_v2_prime;
  Real log_b_prime;
  Real c_3;
  Real c_2;
  Real c_4;
  Real x_t_bound;
  Real c_5;
  Real k_bound;  // max(C_5^(2/3), exp(hhat_upper / D))

  Real hhat_lower, hhat_upper;
};

Real compute_c_e(const WeierstrassCurve& e, mpfr_prec_t prec);

// (sigma, J_E); validates conductor support against Delta. J_E rounded down.
std::pair<Real, Real> compute_sigma_je(const AnalysisInput& in,
                                       mpfr_prec_t prec);

// Places over 2, plus non-minimality candidates when minimality is unknown.
std::pair<std::vector<Int>, unsigned> compute_s_set(const AnalysisInput& in);

// (D_1, D_2); needs the full factorization of |Delta|.
std::pair<Real, Real> compute_d1_d2(const WeierstrassCurve& e, unsigned degree,
                                    mpfr_prec_t prec);

// The smaller closed-form reading of D_1 (no leading factor 2, inner term
// 2 P(Delta)^D without +1). Reported next to D_1; never used in the bound.
Real compute_d1_variant(const WeierstrassCurve& e, unsigned degree,
                        mpfr_prec_t prec);

// (C_4, x_T bound): x_T from the roots of 4x^3 - g2 x - g3, inflated and
// cross-checked against the Cauchy bound 1 + max(|g2|/4, |g3|/4).
std::pair<Real, Real> compute_c4(const ShortCurve& s, const WeierstrassCurve& e,
                                 mpfr_prec_t prec);

struct HVB {
  Real h_triple, log_v1, log_v2_prime, log_b_prime;
};

HVB compute_h_v_b(const ShortCurve& s, const WeierstrassCurve& e,
                  unsigned degree, mpfr_prec_t prec,
                  ConstantsMode mode = ConstantsMode::ClosedForm,
                  const std::optional<LatticeData>& lat = std::nullopt);

// Full report. hhat must be an enclosure of the point's canonical height.
ConstantsReport analyze(const AnalysisInput& in, const HeightEnclosure& hhat,
                        mpfr_prec_t prec,
                        ConstantsMode mode = ConstantsMode::ClosedForm);

// 2*hhat*n^2*(1 - rho(n)) - 2*log n - C_E*(omega(n) + 1) - s*C
Real rhs_lemma_divprim(uint64_t n, const Real& hhat_lower, const Real& c_e,
                       unsigned s, const Real& c_big);

}  // namespace edsbound
