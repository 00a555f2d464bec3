#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "edsbound/curve.hpp"

namespace edsbound {

struct FactorEntry {
  Int prime;
  unsigned exponent = 0;
};

struct Factorization {
  std::vector<FactorEntry> factors;
  Int cofactor = 1;  // unfactored remainder, 1 when complete
  bool complete = true;
};

struct EdsTerm {
  unsigned n = 0;
  Int a_num;            // A_n, numerator of x(nP)
  Int b_den;            // B_n, denominator of x(nP), positive
  Int primitive_part;   // B_n with primes shared with earlier terms stripped
  bool has_primitive_divisor = false;
  Factorization known_factors;  // of B_n, filled on demand
};

struct ApparitionRecord {
  Int p;
  std::optional<unsigned> n_p;  // least n with p | B_n, empty = none up to N
  unsigned search_bound = 0;
};

enum class PrimitiveMode {
  AllPrevious,   // strip primes shared with every B_m, m < n (exact)
  DivisorsOnly,  // strip only primes shared with B_{n/q}, q prime | n
};

// Terms n = 1..N with A_n/B_n = x(nP) in lowest terms. Primitive parts are
// filled in AllPrevious mode. Throws TorsionPoint / PointNotOnCurve.
std::vector<EdsTerm> generate_sequence(const WeierstrassCurve& e,
                                       const CurvePoint& p, unsigned n_max);

// Largest e with p^e | b. Throws NotPrime.
unsigned valuation(const Int& b, const Int& p);

ApparitionRecord rank_of_apparition(const std::vector<EdsTerm>& terms,
                                    const Int& p);

// Terms must cover 1..n contiguously; throws IncompleteSequence.
Int primitive_part(const std::vector<EdsTerm>& terms, unsigned n,
                   PrimitiveMode mode);

// Fills primitive_part / has_primitive_divisor for every term.
void annotate_primitive(std::vector<EdsTerm>& terms,
                        PrimitiveMode mode = PrimitiveMode::AllPrevious);

// sum of p^-2 over distinct primes p | n; always < 1/2
double rho(uint64_t n);

// number of distinct prime divisors
unsigned omega(const Int& n);
inline unsigned omega_k(const Int& n) { return omega(n); }  // D = 1

struct FactorConfig {
  uint64_t trial_bound = 1'000'000;
  uint64_t rho_max_iterations = 1'000'000;
};

Factorization bounded_factor(const Int& b, const FactorConfig& cfg = {});

}  // namespace edsbound
