#pragma once

#include <string>
#include <vector>

#include "edsbound/constants.hpp"

namespace edsbound {

struct CheckResult {
  std::string name;
  bool pass = false;
  size_t checks = 0;
  std::string detail;  // first failure, or summary
};

struct CorpusEntry {
  std::string label;
  AnalysisInput input;
  unsigned sequence_length = 60;
};

// Reference curve y^2 + y = x^3 - x, P = (0,0), conductor 37, plus two more
// rank-one inputs with tabulated conductors.
std::vector<CorpusEntry> default_corpus();

// The full invariant suite: divisibility, rank of apparition, the valuation
// law at good odd primes, primitive-part mode equivalence, rho/omega bounds,
// enclosure consistency, and J_E <= hhat_lower.
std::vector<CheckResult> run_invariant_suite(
    const std::vector<CorpusEntry>& corpus, mpfr_prec_t prec = 128);

bool all_pass(const std::vector<CheckResult>& results);

}  // namespace edsbound
