#pragma once

#include <cstdint>
#include <optional>

#include "edsbound/rational.hpp"

namespace edsbound {

// Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
// over Q, with the standard derived quantities precomputed.
struct WeierstrassCurve {
  Rat a1, a2, a3, a4, a6;
  Rat b2, b4, b6, b8;
  Rat c4, c6;
  Rat disc;   // nonzero
  Rat j_inv;  // c4^3 / disc

  // Throws SingularCurve when the discriminant vanishes.
  static WeierstrassCurve create(const Rat& a1, const Rat& a2, const Rat& a3,
                                 const Rat& a4, const Rat& a6);
};

struct CurvePoint {
  bool infinity = true;
  Rat x, y;

  static CurvePoint at_infinity() { return CurvePoint{}; }
  static CurvePoint affine(Rat px, Rat py) {
    CurvePoint p;
    p.infinity = false;
    p.x = std::move(px);
    p.y = std::move(py);
    return p;
  }
  bool operator==(const CurvePoint& o) const {
    if (infinity || o.infinity) return infinity == o.infinity;
    return x == o.x && y == o.y;
  }
};

// E' : y^2 = 4x^3 - g2 x - g3, reached by x' = x + shift_x, y' = 2y + a1 x + a3.
struct ShortCurve {
  Rat g2, g3;
  Rat shift_x;  // a1^2/12 + a2/3
};

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p);

// -(x, y) = (x, -y - a1 x - a3)
CurvePoint point_negate(const WeierstrassCurve& e, const CurvePoint& p);

CurvePoint point_add(const WeierstrassCurve& e, const CurvePoint& p1,
                     const CurvePoint& p2);

CurvePoint scalar_multiply(const WeierstrassCurve& e, const CurvePoint& p,
                           uint64_t n);

struct TorsionResult {
  bool is_torsion = false;
  unsigned order = 0;  // minimal n with nP = O, when torsion
};

// Torsion screen over Q: nP = O for some n <= 12 decides torsion, since
// Mazur's classification bounds rational torsion orders by 12.
TorsionResult is_torsion(const WeierstrassCurve& e, const CurvePoint& p);

ShortCurve to_short_form(const WeierstrassCurve& e);

// Image of p under the short-form change of variables.
CurvePoint to_short_point(const WeierstrassCurve& e, const ShortCurve& s,
                          const CurvePoint& p);

bool on_short_curve(const ShortCurve& s, const CurvePoint& p);

}  // namespace edsbound
