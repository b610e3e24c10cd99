#include "sweephull/geometry.hpp"

#include <utility>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

bool lex_less(Point a, Point b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

}  // namespace

Orientation orientation(Point a, Point b, Point c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  const double det = l - r;
  const double norm = std::abs(l) + std::abs(r);
  if (std::abs(det) > kPredicateRelEps * norm) {
    return det > 0.0 ? Orientation::CounterClockwise : Orientation::Clockwise;
  }
  // Near-degenerate: redo the determinant, still anchored at a, in extended
  // precision. The double->long double differences below are exact.
  const long double bx = static_cast<long double>(b.x) - a.x;
  const long double by = static_cast<long double>(b.y) - a.y;
  const long double cx = static_cast<long double>(c.x) - a.x;
  const long double cy = static_cast<long double>(c.y) - a.y;
  const long double ll = bx * cy;
  const long double lr = by * cx;
  const long double ldet = ll - lr;
  const long double lnorm = std::abs(ll) + std::abs(lr);
  if (std::abs(ldet) > static_cast<long double>(kPredicateRelEps) * lnorm) {
    return ldet > 0.0L ? Orientation::CounterClockwise : Orientation::Clockwise;
  }
  return Orientation::Collinear;
}

namespace detail {

Circumcircle circumcircle_unchecked(Point a, Point b, Point c) {
  // Anchor at the lexicographically smallest point; the formula below is
  // bit-symmetric in (u,v), so every permutation of the inputs computes the
  // identical circle.
  Point o = a, u = b, v = c;
  if (lex_less(u, o)) std::swap(o, u);
  if (lex_less(v, o)) std::swap(o, v);
  const double ux = u.x - o.x;
  const double uy = u.y - o.y;
  const double vx = v.x - o.x;
  const double vy = v.y - o.y;
  const double d = 2.0 * (ux * vy - uy * vx);
  const double nu = ux * ux + uy * uy;
  const double nv = vx * vx + vy * vy;
  const double cx = (nu * vy - nv * uy) / d;
  const double cy = (nv * ux - nu * vx) / d;
  return {{o.x + cx, o.y + cy}, cx * cx + cy * cy};
}

}  // namespace detail

Circumcircle circumcircle(Point a, Point b, Point c) {
  if (orientation(a, b, c) == Orientation::Collinear) {
    fail(ErrorCode::CollinearInput, "no finite circumcircle through collinear points");
  }
  return detail::circumcircle_unchecked(a, b, c);
}

CirclePosition in_circumcircle(Point a, Point b, Point c, Point p) {
  switch (orientation(a, b, c)) {
    case Orientation::Collinear:
      fail(ErrorCode::CollinearInput, "in_circumcircle of a collinear triple");
    case Orientation::Clockwise:
      std::swap(b, c);
      break;
    case Orientation::CounterClockwise:
      break;
  }
  // Lifted 3x3 determinant anchored at p; positive means p is inside the
  // circumcircle of the (now CCW) triangle.
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double ad2 = adx * adx + ady * ady;
  const double bd2 = bdx * bdx + bdy * bdy;
  const double cd2 = cdx * cdx + cdy * cdy;
  const double det = ad2 * (bdx * cdy - bdy * cdx) - bd2 * (adx * cdy - ady * cdx) +
                     cd2 * (adx * bdy - ady * bdx);
  const double norm = ad2 * (std::abs(bdx * cdy) + std::abs(bdy * cdx)) +
                      bd2 * (std::abs(adx * cdy) + std::abs(ady * cdx)) +
                      cd2 * (std::abs(adx * bdy) + std::abs(ady * bdx));
  if (std::abs(det) > kPredicateRelEps * norm) {
    return det > 0.0 ? CirclePosition::Inside : CirclePosition::Outside;
  }
  // Ambiguous in double: recompute anchored at a in extended precision.
  // With this anchoring the determinant sign flips relative to det above.
  const long double bax = static_cast<long double>(b.x) - a.x;
  const long double bay = static_cast<long double>(b.y) - a.y;
  const long double cax = static_cast<long double>(c.x) - a.x;
  const long double cay = static_cast<long double>(c.y) - a.y;
  const long double pax = static_cast<long double>(p.x) - a.x;
  const long double pay = static_cast<long double>(p.y) - a.y;
  const long double nb = bax * bax + bay * bay;
  const long double nc = cax * cax + cay * cay;
  const long double np = pax * pax + pay * pay;
  const long double ldet = nb * (cax * pay - cay * pax) - nc * (bax * pay - bay * pax) +
                           np * (bax * cay - bay * cax);
  const long double lnorm =
      nb * (std::abs(cax * pay) + std::abs(cay * pax)) +
      nc * (std::abs(bax * pay) + std::abs(bay * pax)) +
      np * (std::abs(bax * cay) + std::abs(bay * cax));
  if (std::abs(ldet) > static_cast<long double>(kPredicateRelEps) * lnorm) {
    return ldet < 0.0L ? CirclePosition::Inside : CirclePosition::Outside;
  }
  return CirclePosition::OnCircle;
}

}  // namespace sweephull
