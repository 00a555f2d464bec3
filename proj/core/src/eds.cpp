#include "edsbound/eds.hpp"

#include <algorithm>

namespace edsbound {

std::vector<EdsTerm> generate_sequence(const WeierstrassCurve& e,
                                       const CurvePoint& p, unsigned n_max) {
  if (!on_curve(e, p)) throw PointNotOnCurve("sequence point not on curve");
  auto tor = is_torsion(e, p);
  if (tor.is_torsion) {
    throw TorsionPoint("point is torsion of order " + std::to_string(tor.order));
  }
  std::vector<EdsTerm> terms;
  terms.reserve(n_max);
  CurvePoint np = CurvePoint::at_infinity();
  for (unsigned n = 1; n <= n_max; ++n) {
    np = point_add(e, np, p);  // np = n*P, incremental
    EdsTerm t;
    t.n = n;
    t.a_num = np.x.get_num();
    t.b_den = np.x.get_den();
    terms.push_back(std::move(t));
  }
  annotate_primitive(terms, PrimitiveMode::AllPrevious);
  return terms;
}

unsigned valuation(const Int& b, const Int& p) {
  if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 30) == 0) {
    throw NotPrime(p.get_str() + " is not prime");
  }
  unsigned e = 0;
  Int rem = b;
  Int q, r;
  while (rem != 0) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    ++e;
    rem = q;
  }
  return e;
}

ApparitionRecord rank_of_apparition(const std::vector<EdsTerm>& terms,
                                    const Int& p) {
  ApparitionRecord rec;
  rec.p = p;
  rec.search_bound = terms.empty() ? 0 : terms.back().n;
  for (const auto& t : terms) {
    if (mpz_divisible_p(t.b_den.get_mpz_t(), p.get_mpz_t())) {
      rec.n_p = t.n;
      break;
    }
  }
  return rec;
}

// Strip from g every prime it shares with m, by repeated gcd.
static void strip_shared(Int& g, const Int& m) {
  Int d;
  for (;;) {
    mpz_gcd(d.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
    if (d == 1) return;
    mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
}

Int primitive_part(const std::vector<EdsTerm>& terms, unsigned n,
                   PrimitiveMode mode) {
  if (terms.size() < n || terms[n - 1].n != n) {
    throw IncompleteSequence("terms must cover 1..n contiguously");
  }
  Int g = terms[n - 1].b_den;
  if (mode == PrimitiveMode::AllPrevious) {
    for (unsigned m = 1; m < n; ++m) strip_shared(g, terms[m - 1].b_den);
  } else {
    for (unsigned q = 2; q <= n; ++q) {
      if (n % q != 0) continue;
      bool q_prime = true;
      for (unsigned d = 2; d * d <= q; ++d) {
        if (q % d == 0) { q_prime = false; break; }
      }
      if (q_prime) strip_shared(g, terms[n / q - 1].b_den);
    }
  }
  return g;
}

void annotate_primitive(std::vector<EdsTerm>& terms, PrimitiveMode mode) {
  for (auto& t : terms) {
    t.primitive_part = primitive_part(terms, t.n, mode);
    t.has_primitive_divisor = t.primitive_part > 1;
  }
}

double rho(uint64_t n) {
  double sum = 0;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      sum += 1.0 / (double(p) * double(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) sum += 1.0 / (double(n) * double(n));
  return sum;
}

unsigned omega(const Int& n) {
  Int m = ::abs(n);
  if (m <= 1) return 0;
  auto f = bounded_factor(m);
  if (!f.complete) {
    throw FactorizationIncomplete("omega needs the full factorization of " +
                                  n.get_str());
  }
  return static_cast<unsigned>(f.factors.size());
}

static void push_factor(Factorization& out, const Int& p, Int& rem) {
  unsigned e = 0;
  while (mpz_divisible_p(rem.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(rem.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  out.factors.push_back(FactorEntry{p, e});
}

// Brent-cycle Pollard rho; returns a nontrivial factor or 0 on cap.
static Int pollard_rho(const Int& n, uint64_t max_iters) {
  if (mpz_even_p(n.get_mpz_t())) return Int(2);
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eed5eedUL);  // deterministic runs
  for (int attempt = 0; attempt < 8; ++attempt) {
    Int c = rng.get_z_range(n - 3) + 1;
    Int x = rng.get_z_range(n - 2) + 1;
    Int y = x, d = 1;
    uint64_t iters = 0;
    Int diff, prod = 1;
    while (d == 1 && iters < max_iters) {
      // batch gcd every 64 steps
      for (int i = 0; i < 64 && iters < max_iters; ++i, ++iters) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        diff = x - y;
        if (diff == 0) break;
        prod = (prod * diff) % n;
      }
      mpz_gcd(d.get_mpz_t(), prod.get_mpz_t(), n.get_mpz_t());
      if (diff == 0) break;
    }
    if (d > 1 && d < n) return d;
  }
  return Int(0);
}

static void factor_rec(const Int& n, uint64_t max_iters, Factorization& out,
                       Int& leftover) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    Int rem = n;
    push_factor(out, n, rem);
    return;
  }
  Int d = pollard_rho(n, max_iters);
  if (d == 0) {
    leftover *= n;
    return;
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  factor_rec(d, max_iters, out, leftover);
  factor_rec(q, max_iters, out, leftover);
}

Factorization bounded_factor(const Int& b, const FactorConfig& cfg) {
  Factorization out;
  Int rem = ::abs(b);
  if (rem <= 1) return out;

  if (mpz_divisible_ui_p(rem.get_mpz_t(), 2)) push_factor(out, Int(2), rem);
  if (mpz_divisible_ui_p(rem.get_mpz_t(), 3)) push_factor(out, Int(3), rem);
  for (uint64_t p = 5; p <= cfg.trial_bound && rem > 1; p += 6) {
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p)) push_factor(out, Int(p), rem);
    if (mpz_divisible_ui_p(rem.get_mpz_t(), p + 2)) {
      push_factor(out, Int(p + 2), rem);
    }
    Int bound = Int(p + 2) * Int(p + 2);
    if (bound > rem) break;
  }
  if (rem > 1) {
    Int sq;
    mpz_sqrt(sq.get_mpz_t(), rem.get_mpz_t());
    if (sq <= cfg.trial_bound) {
      // remainder below the trial square is prime
      Int p = rem;
      push_factor(out, p, rem);
    } else if (mpz_probab_prime_p(rem.get_mpz_t(), 30)) {
      Int p = rem;
      push_factor(out, p, rem);
    } else {
      Int leftover = 1;
      factor_rec(rem, cfg.rho_max_iterations, out, leftover);
      rem = leftover;
      if (leftover > 1) {
        out.cofactor = leftover;
        out.complete = false;
      }
    }
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const FactorEntry& a, const FactorEntry& b2) {
              return a.prime < b2.prime;
            });
  // merge duplicates from recursive splits
  Factorization merged;
  merged.cofactor = out.cofactor;
  merged.complete = out.complete;
  for (auto& f : out.factors) {
    if (!merged.factors.empty() && merged.factors.back().prime == f.prime) {
      merged.factors.back().exponent += f.exponent;
    } else {
      merged.factors.push_back(f);
    }
  }
  return merged;
}

}  // namespace edsbound
