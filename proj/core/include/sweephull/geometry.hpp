#pragma once

#include <cmath>
#include <cstdint>

namespace sweephull {

using Index = std::int32_t;
inline constexpr Index kNoIndex = -1;

/// 2D point. Coordinates must be finite.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

enum class Orientation { CounterClockwise, Clockwise, Collinear };

enum class CirclePosition { Inside, Outside, OnCircle };

/// Circle through three points, kept as center plus squared radius.
struct Circumcircle {
  Point center;
  double radius_sq = 0.0;
};

/// Relative deadband for the orientation and in-circle determinants.
/// A determinant whose magnitude falls within this fraction of the sum of
/// its term magnitudes is re-evaluated in extended precision; if it is
/// still inside the band the configuration is classified as degenerate
/// (Collinear / OnCircle).
inline constexpr double kPredicateRelEps = 1e-12;

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double dist_sq(Point a, Point b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  return dx * dx + dy * dy;
}

/// Sign of the cross product (b-a) x (c-a).
Orientation orientation(Point a, Point b, Point c);

/// Circle through three non-collinear points. The computation is anchored at
/// the lexicographically smallest input, so any permutation of the same three
/// points yields a bit-identical result. Throws CollinearInput.
Circumcircle circumcircle(Point a, Point b, Point c);

/// Classify p against the circumcircle of (a,b,c). The triangle may be given
/// in either winding; collinear (a,b,c) throws CollinearInput.
CirclePosition in_circumcircle(Point a, Point b, Point c, Point p);

namespace detail {

/// circumcircle() without the collinearity check, for hot paths whose inputs
/// are non-collinear by construction. Same formula, same bit-stable result.
Circumcircle circumcircle_unchecked(Point a, Point b, Point c);

}  // namespace detail

}  // namespace sweephull
