#include <doctest.h>

#include "edsbound/eds.hpp"

using namespace edsbound;

namespace {

WeierstrassCurve ref_curve() {
  return WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0));
}

std::vector<EdsTerm> ref_terms(unsigned n) {
  static auto e = ref_curve();
  return generate_sequence(e, CurvePoint::affine(Rat(0), Rat(0)), n);
}

}  // namespace

TEST_CASE("reference sequence B_1..B_10") {
  auto terms = ref_terms(10);
  std::vector<long> want = {1, 1, 1, 1, 4, 1, 9, 25, 49, 16};
  REQUIRE(terms.size() == 10);
  for (unsigned i = 0; i < 10; ++i) {
    CHECK(terms[i].b_den == Int(want[i]));
    Int g;
    mpz_gcd(g.get_mpz_t(), terms[i].a_num.get_mpz_t(),
            terms[i].b_den.get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("torsion and off-curve points are rejected") {
  auto e = ref_curve();
  CHECK_THROWS_AS(generate_sequence(e, CurvePoint::at_infinity(), 5),
                  TorsionPoint);
  CHECK_THROWS_AS(generate_sequence(e, CurvePoint::affine(Rat(3), Rat(3)), 5),
                  PointNotOnCurve);
}

TEST_CASE("valuation") {
  CHECK(valuation(Int(16), Int(2)) == 4);
  CHECK(valuation(Int(37), Int(2)) == 0);
  CHECK_THROWS_AS(valuation(Int(16), Int(4)), NotPrime);

  auto terms = ref_terms(5);
  CHECK(valuation(terms[4].b_den, Int(2)) == 2);  // B_5 = 4
}

TEST_CASE("rank of apparition") {
  auto terms = ref_terms(10);
  auto r2 = rank_of_apparition(terms, Int(2));
  REQUIRE(r2.n_p.has_value());
  CHECK(*r2.n_p == 5);

  auto r3 = rank_of_apparition(terms, Int(3));
  REQUIRE(r3.n_p.has_value());
  CHECK(*r3.n_p == 7);

  auto none = rank_of_apparition(terms, Int(9973));
  CHECK_FALSE(none.n_p.has_value());
  CHECK(none.search_bound == 10);
}

TEST_CASE("primitive part") {
  auto terms = ref_terms(10);
  CHECK(primitive_part(terms, 10, PrimitiveMode::AllPrevious) == 1);
  CHECK(primitive_part(terms, 5, PrimitiveMode::AllPrevious) == 4);
  CHECK(primitive_part(terms, 1, PrimitiveMode::AllPrevious) == 1);
  CHECK(terms[4].has_primitive_divisor);
  CHECK_FALSE(terms[9].has_primitive_divisor);

  CHECK_THROWS_AS(primitive_part(terms, 11, PrimitiveMode::AllPrevious),
                  IncompleteSequence);
}

TEST_CASE("gcd stripping matches a naive factor-based oracle") {
  auto terms = ref_terms(30);
  for (unsigned n = 1; n <= 30; ++n) {
    // oracle: factor B_n outright, keep primes absent from every earlier term
    Int expect = 1;
    for (const auto& f : bounded_factor(terms[n - 1].b_den).factors) {
      bool seen = false;
      for (unsigned m = 1; m < n && !seen; ++m) {
        seen = mpz_divisible_p(terms[m - 1].b_den.get_mpz_t(),
                               f.prime.get_mpz_t());
      }
      if (!seen) {
        for (unsigned k = 0; k < f.exponent; ++k) expect *= f.prime;
      }
    }
    CHECK(primitive_part(terms, n, PrimitiveMode::AllPrevious) == expect);
  }
}

TEST_CASE("mode equivalence on the reference curve") {
  auto terms = ref_terms(48);
  for (unsigned n = 1; n <= 48; ++n) {
    CHECK(primitive_part(terms, n, PrimitiveMode::AllPrevious) ==
          primitive_part(terms, n, PrimitiveMode::DivisorsOnly));
  }
}

TEST_CASE("divisibility-sequence property up to 60") {
  auto terms = ref_terms(60);
  for (unsigned n = 1; n <= 60; ++n) {
    for (unsigned m = 1; m < n; ++m) {
      if (n % m == 0) {
        CHECK(mpz_divisible_p(terms[n - 1].b_den.get_mpz_t(),
                              terms[m - 1].b_den.get_mpz_t()));
      }
    }
  }
}

TEST_CASE("rho") {
  CHECK(rho(1) == 0.0);
  CHECK(rho(10) == doctest::Approx(0.29).epsilon(1e-12));
  for (uint64_t k = 1; k <= 20; ++k) {
    CHECK(rho(uint64_t(1) << k) == doctest::Approx(0.25).epsilon(1e-15));
  }
}

TEST_CASE("omega") {
  CHECK(omega(Int(1)) == 0);
  CHECK(omega(Int(12)) == 2);
  CHECK(omega(Int(210)) == 4);
  CHECK(omega_k(Int(210)) == 4);
}

TEST_CASE("bounded factoring") {
  auto f16 = bounded_factor(Int(16));
  REQUIRE(f16.factors.size() == 1);
  CHECK(f16.factors[0].prime == 2);
  CHECK(f16.factors[0].exponent == 4);
  CHECK(f16.complete);

  auto f37 = bounded_factor(Int(37));
  REQUIRE(f37.factors.size() == 1);
  CHECK(f37.factors[0].prime == 37);
  CHECK(f37.complete);

  // product of two 40-digit primes defeats the configured effort
  Int base1("1000000000000000000000000000000000000003");
  Int p1, p2;
  mpz_nextprime(p1.get_mpz_t(), base1.get_mpz_t());
  Int base2 = base1 * 7 + 12;
  mpz_nextprime(p2.get_mpz_t(), base2.get_mpz_t());
  FactorConfig small_effort;
  small_effort.trial_bound = 10'000;
  small_effort.rho_max_iterations = 2'000;
  auto hard = bounded_factor(p1 * p2, small_effort);
  CHECK_FALSE(hard.complete);
  CHECK(hard.cofactor > 1);
}
