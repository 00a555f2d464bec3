#include "edsbound/verify.hpp"

#include <cmath>
#include <sstream>

namespace edsbound {

std::vector<CorpusEntry> default_corpus() {
  std::vector<CorpusEntry> corpus;
  {
    // y^2 + y = x^3 - x, conductor 37, P = (0,0)
    CorpusEntry c;
    c.label = "37a1";
    c.input.curve = WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0));
    c.input.point = CurvePoint::affine(Rat(0), Rat(0));
    c.input.conductor = 37;
    c.input.asserted_minimal = true;
    corpus.push_back(std::move(c));
  }
  {
    // y^2 + y = x^3 + x^2 - 2x, conductor 389, P = (0,0)
    CorpusEntry c;
    c.label = "389a1";
    c.input.curve = WeierstrassCurve::create(Rat(0), Rat(1), Rat(1), Rat(-2), Rat(0));
    c.input.point = CurvePoint::affine(Rat(0), Rat(0));
    c.input.conductor = 389;
    c.input.asserted_minimal = true;
    corpus.push_back(std::move(c));
  }
  {
    // y^2 + y = x^3 - 7x + 6, conductor 5077, P = (1,0)
    CorpusEntry c;
    c.label = "5077a1";
    c.input.curve = WeierstrassCurve::create(Rat(0), Rat(0), Rat(1), Rat(-7), Rat(6));
    c.input.point = CurvePoint::affine(Rat(1), Rat(0));
    c.input.conductor = 5077;
    c.input.asserted_minimal = true;
    corpus.push_back(std::move(c));
  }
  return corpus;
}

namespace {

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p <= bound; ++p) {
    if (!sieve[p]) continue;
    out.push_back(p);
    for (uint64_t q = p * p; q <= bound; q += p) sieve[q] = false;
  }
  return out;
}

struct SuiteState {
  std::vector<CheckResult> results;
  void record(const std::string& name, bool pass, size_t checks,
              const std::string& detail) {
    results.push_back(CheckResult{name, pass, checks, detail});
  }
};

void check_divisibility(const std::string& label,
                        const std::vector<EdsTerm>& terms, SuiteState& st) {
  size_t checks = 0;
  for (unsigned n = 1; n <= terms.size(); ++n) {
    for (unsigned m = 1; m < n; ++m) {
      if (n % m != 0) continue;
      ++checks;
      if (!mpz_divisible_p(terms[n - 1].b_den.get_mpz_t(),
                           terms[m - 1].b_den.get_mpz_t())) {
        st.record(label + ":divisibility", false, checks,
                  "B_" + std::to_string(m) + " does not divide B_" +
                      std::to_string(n));
        return;
      }
    }
  }
  st.record(label + ":divisibility", true, checks, "");
}

std::vector<Int> appearing_primes(const std::vector<EdsTerm>& terms,
                                  uint64_t bound) {
  std::vector<Int> out;
  for (uint64_t p : primes_up_to(bound)) {
    Int zp(static_cast<unsigned long>(p));
    for (const auto& t : terms) {
      if (mpz_divisible_p(t.b_den.get_mpz_t(), zp.get_mpz_t())) {
        out.push_back(zp);
        break;
      }
    }
  }
  return out;
}

void check_apparition(const std::string& label,
                      const std::vector<EdsTerm>& terms, SuiteState& st) {
  size_t checks = 0;
  for (const Int& p : appearing_primes(terms, 10'000)) {
    auto rec = rank_of_apparition(terms, p);
    unsigned np = *rec.n_p;
    for (const auto& t : terms) {
      ++checks;
      bool divides = mpz_divisible_p(t.b_den.get_mpz_t(), p.get_mpz_t());
      if (divides != (t.n % np == 0)) {
        st.record(label + ":apparition", false, checks,
                  "p=" + p.get_str() + " n=" + std::to_string(t.n) +
                      " n_p=" + std::to_string(np));
        return;
      }
    }
  }
  st.record(label + ":apparition", true, checks, "");
}

void check_valuation_law(const std::string& label, const WeierstrassCurve& e,
                         const std::vector<EdsTerm>& terms, SuiteState& st) {
  Int delta = ::abs(e.disc.get_num());
  size_t checks = 0;
  for (const Int& p : appearing_primes(terms, 10'000)) {
    if (p == 2) continue;
    if (mpz_divisible_p(delta.get_mpz_t(), p.get_mpz_t())) continue;
    auto rec = rank_of_apparition(terms, p);
    unsigned np = *rec.n_p;
    unsigned base = valuation(terms[np - 1].b_den, p);
    for (unsigned m = 1; m * np <= terms.size(); ++m) {
      ++checks;
      // ord_p(B_k) = 2 nu(z_k) for the formal-group parameter z = x/y, and
      // nu([m]z) = nu(z) + nu(m), so the B-term increment is twice ord_p(m).
      unsigned got = valuation(terms[m * np - 1].b_den, p);
      unsigned want = base + 2 * valuation(Int(m), p);
      if (got != want) {
        st.record(label + ":valuation-law", false, checks,
                  "p=" + p.get_str() + " m=" + std::to_string(m) +
                      " got=" + std::to_string(got) +
                      " want=" + std::to_string(want));
        return;
      }
    }
  }
  st.record(label + ":valuation-law", true, checks, "");
}

void check_mode_equivalence(const std::string& label,
                            const std::vector<EdsTerm>& terms, SuiteState& st) {
  size_t checks = 0;
  unsigned n_max = std::min<unsigned>(48, terms.size());
  for (unsigned n = 1; n <= n_max; ++n) {
    ++checks;
    Int a = primitive_part(terms, n, PrimitiveMode::AllPrevious);
    Int b = primitive_part(terms, n, PrimitiveMode::DivisorsOnly);
    if (a != b) {
      st.record(label + ":mode-equivalence", false, checks,
                "n=" + std::to_string(n) + " all-previous=" + a.get_str() +
                    " divisors-only=" + b.get_str());
      return;
    }
  }
  st.record(label + ":mode-equivalence", true, checks, "");
}

void check_enclosures(const std::string& label, const AnalysisInput& in,
                      mpfr_prec_t prec, SuiteState& st) {
  Real c_e = compute_c_e(in.curve, prec);
  auto e1 = enclosure_at_doublings(in.curve, in.point, 4, c_e, prec);
  auto e2 = enclosure_at_doublings(in.curve, in.point, 5, c_e, prec);
  bool nested = cmp(e1.lower, e2.lower) <= 0 && cmp(e2.upper, e1.upper) <= 0;
  bool intersect = cmp(e2.lower, e1.upper) <= 0 && cmp(e1.lower, e2.upper) <= 0;

  // quadraticity: enclosure(nP) overlaps n^2 * enclosure(P)
  bool quad = true;
  auto base = enclosure_at_doublings(in.curve, in.point, 6, c_e, prec);
  for (unsigned n : {2u, 3u, 5u}) {
    auto multiple = scalar_multiply(in.curve, in.point, n);
    auto en = enclosure_at_doublings(in.curve, multiple, 6, c_e, prec);
    Real lo = mul_d(base.lower, double(n) * n, MPFR_RNDD);
    Real hi = mul_d(base.upper, double(n) * n, MPFR_RNDU);
    if (cmp(en.upper, lo) < 0 || cmp(hi, en.lower) < 0) quad = false;
  }
  bool pass = nested && intersect && quad;
  st.record(label + ":enclosure-consistency", pass, 5,
            pass ? "" : "nested/intersect/quadraticity failure");
}

void check_lang_bound(const std::string& label, const AnalysisInput& in,
                      mpfr_prec_t prec, SuiteState& st) {
  Real c_e = compute_c_e(in.curve, prec);
  auto enc = canonical_height_enclosure(in.curve, in.point, 1e-3, c_e, prec);
  auto [sigma, j_e] = compute_sigma_je(in, prec);
  bool pass = cmp(j_e, enc.lower) <= 0 && enc.lower.sign() > 0;
  st.record(label + ":lang-bound", pass, 1,
            pass ? "" : "J_E exceeds the certified lower height");
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(
    const std::vector<CorpusEntry>& corpus, mpfr_prec_t prec) {
  SuiteState st;

  for (const auto& entry : corpus) {
    auto terms = generate_sequence(entry.input.curve, entry.input.point,
                                   entry.sequence_length);
    check_divisibility(entry.label, terms, st);
    check_apparition(entry.label, terms, st);
    check_valuation_law(entry.label, entry.input.curve, terms, st);
    check_mode_equivalence(entry.label, terms, st);
    check_enclosures(entry.label, entry.input, prec, st);
    check_lang_bound(entry.label, entry.input, prec, st);
  }

  {
    size_t checks = 0;
    bool pass = true;
    std::string detail;
    for (uint64_t n = 1; n <= 100'000; ++n) {
      ++checks;
      if (rho(n) >= 0.5) {
        pass = false;
        detail = "rho(" + std::to_string(n) + ") >= 1/2";
        break;
      }
    }
    st.record("helper:rho-bound", pass, checks, detail);
  }
  {
    size_t checks = 0;
    bool pass = true;
    std::string detail;
    // omega over a sieve, compared against log2 n
    const uint64_t bound = 100'000;
    std::vector<uint8_t> w(bound + 1, 0);
    for (uint64_t p = 2; p <= bound; ++p) {
      if (w[p] != 0) continue;  // composite, already counted
      for (uint64_t q = p; q <= bound; q += p) ++w[q];
    }
    for (uint64_t n = 2; n <= bound; ++n) {
      ++checks;
      if (double(w[n]) > std::log2(double(n)) + 1e-12) {
        pass = false;
        detail = "omega(" + std::to_string(n) + ") exceeds log2 n";
        break;
      }
    }
    st.record("helper:omega-bound", pass, checks, detail);
  }

  return st.results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace edsbound
