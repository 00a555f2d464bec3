#include "edsbound/curve.hpp"

namespace edsbound {

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Int n(s);
      return Rat(n);
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    return make_rat(n, d);
  } catch (const std::invalid_argument&) {
    throw ParseError("cannot parse rational: " + s);
  }
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

WeierstrassCurve WeierstrassCurve::create(const Rat& a1, const Rat& a2,
                                          const Rat& a3, const Rat& a4,
                                          const Rat& a6) {
  WeierstrassCurve e;
  e.a1 = a1;
  e.a2 = a2;
  e.a3 = a3;
  e.a4 = a4;
  e.a6 = a6;
  e.b2 = a1 * a1 + 4 * a2;
  e.b4 = 2 * a4 + a1 * a3;
  e.b6 = a3 * a3 + 4 * a6;
  e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  e.c4 = e.b2 * e.b2 - 24 * e.b4;
  e.c6 = -e.b2 * e.b2 * e.b2 + 36 * e.b2 * e.b4 - 216 * e.b6;
  e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 -
           27 * e.b6 * e.b6 + 9 * e.b2 * e.b4 * e.b6;
  if (e.disc == 0) throw SingularCurve("discriminant is zero");
  e.j_inv = e.c4 * e.c4 * e.c4 / e.disc;
  return e;
}

bool on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return true;
  Rat lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
  Rat rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
  return lhs == rhs;
}

static void require_on_curve(const WeierstrassCurve& e, const CurvePoint& p) {
  if (!on_curve(e, p)) throw PointNotOnCurve("point does not satisfy the curve equation");
}

CurvePoint point_negate(const WeierstrassCurve& e, const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x, -p.y - e.a1 * p.x - e.a3);
}

CurvePoint point_add(const WeierstrassCurve& e, const CurvePoint& p1,
                     const CurvePoint& p2) {
  require_on_curve(e, p1);
  require_on_curve(e, p2);
  if (p1.infinity) return p2;
  if (p2.infinity) return p1;

  if (p1.x == p2.x && p2.y == -p1.y - e.a1 * p1.x - e.a3) {
    return CurvePoint::at_infinity();
  }

  Rat lambda, nu;
  if (p1.x == p2.x) {
    // tangent line
    Rat denom = 2 * p1.y + e.a1 * p1.x + e.a3;
    lambda = (3 * p1.x * p1.x + 2 * e.a2 * p1.x + e.a4 - e.a1 * p1.y) / denom;
    nu = (-p1.x * p1.x * p1.x + e.a4 * p1.x + 2 * e.a6 - e.a3 * p1.y) / denom;
  } else {
    Rat denom = p2.x - p1.x;
    lambda = (p2.y - p1.y) / denom;
    nu = (p1.y * p2.x - p2.y * p1.x) / denom;
  }
  Rat x3 = lambda * lambda + e.a1 * lambda - e.a2 - p1.x - p2.x;
  Rat y3 = -(lambda + e.a1) * x3 - nu - e.a3;
  return CurvePoint::affine(x3, y3);
}

CurvePoint scalar_multiply(const WeierstrassCurve& e, const CurvePoint& p,
                           uint64_t n) {
  require_on_curve(e, p);
  CurvePoint acc = CurvePoint::at_infinity();
  CurvePoint base = p;
  while (n > 0) {
    if (n & 1) acc = point_add(e, acc, base);
    n >>= 1;
    if (n > 0) base = point_add(e, base, base);
  }
  return acc;
}

TorsionResult is_torsion(const WeierstrassCurve& e, const CurvePoint& p) {
  require_on_curve(e, p);
  CurvePoint acc = CurvePoint::at_infinity();
  for (unsigned n = 1; n <= 12; ++n) {
    acc = point_add(e, acc, p);
    if (acc.infinity) return TorsionResult{true, n};
  }
  return TorsionResult{};
}

ShortCurve to_short_form(const WeierstrassCurve& e) {
  ShortCurve s;
  s.g2 = e.c4 / 12;
  s.g3 = e.c6 / 216;
  s.shift_x = e.b2 / 12;  // = a1^2/12 + a2/3
  return s;
}

CurvePoint to_short_point(const WeierstrassCurve& e, const ShortCurve& s,
                          const CurvePoint& p) {
  if (p.infinity) return p;
  return CurvePoint::affine(p.x + s.shift_x, 2 * p.y + e.a1 * p.x + e.a3);
}

bool on_short_curve(const ShortCurve& s, const CurvePoint& p) {
  if (p.infinity) return true;
  return p.y * p.y == 4 * p.x * p.x * p.x - s.g2 * p.x - s.g3;
}

}  // namespace edsbound
