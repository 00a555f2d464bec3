#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "edsbound/constants.hpp"

using namespace edsbound;

namespace {

constexpr mpfr_prec_t kPrec = 128;

AnalysisInput ref_input(bool minimal = true) {
  AnalysisInput in;
  in.curve = WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0));
  in.point = CurvePoint::affine(Rat(0), Rat(0));
  in.conductor = 37;
  in.asserted_minimal = minimal;
  return in;
}

ConstantsReport ref_report(bool minimal = true,
                           ConstantsMode mode = ConstantsMode::ClosedForm) {
  auto in = ref_input(minimal);
  Real c_e = compute_c_e(in.curve, kPrec);
  auto enc = canonical_height_enclosure(in.curve, in.point, 1e-3, c_e, kPrec);
  return analyze(in, enc, kPrec, mode);
}

bool contains_prime(const std::vector<Int>& v, long p) {
  return std::find(v.begin(), v.end(), Int(p)) != v.end();
}

}  // namespace

TEST_CASE("C_E against a double-precision rebuild") {
  auto in = ref_input();
  double h_j = std::log(110592.0);            // j = 110592/37
  double h_delta = std::log(37.0);
  double hoo_j = std::log(110592.0 / 37.0);
  double hoo_b2 = 0.0;                        // b2 = 0
  double want = 2.84 + h_j / 12 + h_delta / 6 + hoo_j / 6 + hoo_b2 / 6;
  Real c_e = compute_c_e(in.curve, kPrec);
  CHECK(c_e.to_double() == doctest::Approx(want).epsilon(1e-12));
  CHECK(c_e.to_double() == doctest::Approx(5.743401).epsilon(1e-6));
}

TEST_CASE("sigma is exactly 1 when the conductor equals |Delta|") {
  auto [sigma, j_e] = compute_sigma_je(ref_input(), kPrec);
  CHECK(sigma.to_double() == 1.0);

  double denom = 1e15 * std::pow(std::log(104613.0), 2);
  CHECK(j_e.to_double() ==
        doctest::Approx(std::log(37.0) / denom).epsilon(1e-10));
  CHECK(j_e.to_double() == doctest::Approx(2.703028e-17).epsilon(1e-6));
}

TEST_CASE("conductor with foreign prime support is rejected") {
  auto in = ref_input();
  in.conductor = 35;
  CHECK_THROWS_AS(compute_sigma_je(in, kPrec), BadConductor);
}

TEST_CASE("S set") {
  auto [s_min, count_min] = compute_s_set(ref_input(true));
  CHECK(count_min == 1);
  REQUIRE(s_min.size() == 1);
  CHECK(s_min[0] == 2);

  auto [s_unk, count_unk] = compute_s_set(ref_input(false));
  CHECK(count_unk == 2);
  CHECK(contains_prime(s_unk, 2));
  CHECK(contains_prime(s_unk, 3));

  // the u = 5 rescaling of the reference curve: 5^4 | c4 and 5^12 | Delta
  AnalysisInput scaled = ref_input(false);
  scaled.curve =
      WeierstrassCurve::create(Rat(0), Rat(0), Rat(125), Rat(-625), Rat(0));
  auto [s_scaled, count_scaled] = compute_s_set(scaled);
  CHECK(count_scaled == 3);
  CHECK(contains_prime(s_scaled, 5));
}

TEST_CASE("D_1 and the variant reading") {
  auto in = ref_input();
  auto [d1, d2] = compute_d1_d2(in.curve, 1, kPrec);
  // P(Delta) = 37, H(j) = 110592, degree 1
  double m = std::max(4.0, std::log2(110592.0));
  double inner = 37.0 * m * (2.0 * 37.0 + 1.0);
  CHECK(d1.to_double() == doctest::Approx(2.0 * inner * inner).epsilon(1e-9));
  CHECK(d1.to_double() == doctest::Approx(4.323535e9).epsilon(1e-6));
  CHECK(d2.to_double() == compute_c_e(in.curve, kPrec).to_double());

  double inner_v = 37.0 * m * (2.0 * 37.0);
  Real var = compute_d1_variant(in.curve, 1, kPrec);
  CHECK(var.to_double() == doctest::Approx(inner_v * inner_v).epsilon(1e-9));
  CHECK(var.to_double() < d1.to_double());
}

TEST_CASE("C_4 and the torsion x-bound") {
  auto in = ref_input();
  auto s = to_short_form(in.curve);
  auto [c4, xt] = compute_c4(s, in.curve, kPrec);

  // largest root modulus of x^3 - x + 1/4 (the root near -1.1072)
  double r = -1.2;
  for (int i = 0; i < 60; ++i) {
    r -= (r * r * r - r + 0.25) / (3 * r * r - 1);
  }
  CHECK(xt.to_double() == doctest::Approx(std::fabs(r)).epsilon(1e-6));
  CHECK(xt.to_double() == doctest::Approx(1.107160).epsilon(1e-5));
  // a1 = a2 = 0, so the affine term vanishes and C_4 = 2|x_T|
  CHECK(c4.to_double() == doctest::Approx(2.0 * xt.to_double()).epsilon(1e-12));
  CHECK(c4.to_double() == doctest::Approx(2.214320).epsilon(1e-5));
}

TEST_CASE("h, V and B quantities") {
  auto in = ref_input();
  auto s = to_short_form(in.curve);
  auto hvb = compute_h_v_b(s, in.curve, 1, kPrec);

  double h = std::log(110592.0);  // h(j) dominates h(1,4,-1) and 1
  CHECK(hvb.h_triple.to_double() == doctest::Approx(h).epsilon(1e-12));
  CHECK(hvb.log_v1.to_double() == doctest::Approx(h).epsilon(1e-12));
  double lv2 = 11.0 * std::pow(6.2 + std::log(110592.0 / 37.0), 2);
  CHECK(hvb.log_v2_prime.to_double() == doctest::Approx(lv2).epsilon(1e-10));
  CHECK(hvb.log_b_prime.to_double() == doctest::Approx(lv2).epsilon(1e-10));
}

TEST_CASE("h, V and B on a curve where the floors bite") {
  // y^2 = x^3 + 1: j = 0, so h = log 4 and the 11-floors take over
  auto e = WeierstrassCurve::create(Rat(0), Rat(0), Rat(0), Rat(0), Rat(1));
  auto s = to_short_form(e);
  auto hvb = compute_h_v_b(s, e, 1, kPrec);
  CHECK(hvb.h_triple.to_double() ==
        doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(hvb.log_v1.to_double() == doctest::Approx(11.0).epsilon(1e-12));
  CHECK(hvb.log_v2_prime.to_double() ==
        doctest::Approx(11.0 * 6.2 * 6.2).epsilon(1e-12));
}

TEST_CASE("full tower on the reference input") {
  auto rep = ref_report();

  CHECK(rep.c_e.to_double() == doctest::Approx(5.743401).epsilon(1e-6));
  CHECK(rep.sigma.to_double() == 1.0);
  CHECK(rep.j_e.to_double() == doctest::Approx(2.703028e-17).epsilon(1e-6));
  CHECK(rep.s == 1);
  CHECK(rep.d_1.to_double() == doctest::Approx(4.323535e9).epsilon(1e-6));
  CHECK(rep.c_3.to_double() == doctest::Approx(2.5928e58).epsilon(1e-3));
  CHECK(rep.c_5.to_double() == doctest::Approx(4.2567e78).epsilon(1e-3));
  CHECK(rep.k_bound.to_double() == doctest::Approx(2.6265e52).epsilon(1e-3));

  // structural identities
  CHECK(rep.d_2.to_double() == rep.c_e.to_double());
  double c_want = rep.hhat_upper.to_double() * rep.d_1.to_double() +
                  rep.d_2.to_double();
  CHECK(rep.c_big.to_double() == doctest::Approx(c_want).epsilon(1e-9));
  double c2_want = rep.c_3.to_double() *
                   std::max(rep.log_v2_prime.to_double(),
                            rep.hhat_upper.to_double());
  CHECK(rep.c_2.to_double() == doctest::Approx(c2_want).epsilon(1e-6));
  CHECK(rep.k_bound.to_double() >=
        std::pow(rep.c_5.to_double(), 2.0 / 3.0) * (1 - 1e-9));

  // the analytic lower bound really sits below the certified interval
  CHECK(rep.j_e.to_double() <= rep.hhat_lower.to_double());
  CHECK(rep.hhat_lower.to_double() > 0.0);
}

TEST_CASE("dropping the minimality assertion only enlarges the bound") {
  auto min = ref_report(true);
  auto unk = ref_report(false);
  CHECK(unk.s > min.s);
  CHECK(unk.c_5.to_double() >= min.c_5.to_double());
  CHECK(unk.k_bound.to_double() >= min.k_bound.to_double());
}

TEST_CASE("two working precisions agree") {
  auto in = ref_input();
  Real c64 = compute_c_e(in.curve, 64);
  Real c128 = compute_c_e(in.curve, 128);
  // upward-rounded constant: more precision can only shave it
  CHECK(c128.to_double() <= c64.to_double());
  CHECK(std::fabs(c64.to_double() - c128.to_double()) <=
        1e-6 * c128.to_double());

  auto [s64, j64] = compute_sigma_je(in, 64);
  auto [s128, j128] = compute_sigma_je(in, 128);
  // downward-rounded lower bound: the direction flips
  CHECK(j64.to_double() <= j128.to_double());
  CHECK(std::fabs(j64.to_double() - j128.to_double()) <=
        1e-6 * j128.to_double());

  auto enc64 = canonical_height_enclosure(in.curve, in.point, 1e-3, c64, 64);
  auto rep64 = analyze(in, enc64, 64);
  auto rep128 = ref_report();
  for (auto pick : {+[](const ConstantsReport& r) { return r.d_1.to_double(); },
                    +[](const ConstantsReport& r) { return r.c_3.to_double(); },
                    +[](const ConstantsReport& r) { return r.c_5.to_double(); },
                    +[](const ConstantsReport& r) {
                      return r.k_bound.to_double();
                    }}) {
    CHECK(std::fabs(pick(rep64) - pick(rep128)) <=
          1e-6 * std::fabs(pick(rep128)));
  }
}

TEST_CASE("divisor-sum inequality right-hand side") {
  auto rep = ref_report();

  Real rhs1 = rhs_lemma_divprim(1, rep.hhat_lower, rep.c_e, rep.s, rep.c_big);
  double want1 = 2.0 * rep.hhat_lower.to_double() - rep.c_e.to_double() -
                 double(rep.s) * rep.c_big.to_double();
  CHECK(rhs1.to_double() == doctest::Approx(want1).epsilon(1e-9));
  CHECK(rhs1.to_double() < 0.0);

  // the quadratic term wins well before the proved threshold K
  Real far =
      rhs_lemma_divprim(100000, rep.hhat_lower, rep.c_e, rep.s, rep.c_big);
  CHECK(far.to_double() > 0.0);
}
