#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace edsbound {

using Int = mpz_class;
using Rat = mpq_class;

struct SingularCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct PointNotOnCurve : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct TorsionPoint : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IncompleteSequence : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BadConductor : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct WidthUnreachable : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct FactorizationIncomplete : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingPrerequisite : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// num/den canonicalized, den > 0.
inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p/q" or "p" with optional sign.
Rat parse_rat(const std::string& s);

std::string rat_to_string(const Rat& r);

inline const Int& num(const Rat& r) { return r.get_num(); }
inline const Int& den(const Rat& r) { return r.get_den(); }

inline bool is_canonical(const Rat& r) {
  Rat c(r.get_num(), r.get_den());
  c.canonicalize();
  return c.get_num() == r.get_num() && c.get_den() == r.get_den() &&
         r.get_den() > 0;
}

}  // namespace edsbound
