#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "sweephull/triangulation.hpp"

namespace sweephull::oracle {

/// Findings of a full triangulation audit. Flags are true when the
/// corresponding invariant holds; an empty violation list means the Delaunay
/// property holds at the audit tolerance.
struct AuditReport {
  std::vector<std::pair<TriIndex, Index>> delaunay_violations;
  double area_mismatch = 0.0;  // |sum of triangle areas - hull area| / hull area
  bool euler_ok = false;
  bool manifold_ok = false;
  bool adjacency_ok = false;
  bool hull_matches_oracle = false;
  bool ccw_ok = false;
  bool cached_circles_ok = false;
  bool coverage_ok = false;

  bool structural_ok() const {
    return euler_ok && manifold_ok && adjacency_ok && hull_matches_oracle &&
           ccw_ok && cached_circles_ok && coverage_ok && area_mismatch <= 1e-9;
  }
  bool ok() const { return structural_ok() && delaunay_violations.empty(); }
};

/// Exhaustive O(n^4) Delaunay construction: every triple whose circumcircle
/// strictly contains no other point. Triangles come out CCW. Throws
/// DegenerateCocircular when an otherwise-empty circumcircle has a fourth
/// point on its boundary (the output would be ambiguous), TooFewPoints below
/// 3 points. Intended for n up to a couple hundred.
std::vector<std::array<Index, 3>> brute_force_delaunay(std::span<const Point> points);

/// O(nh) gift-wrapping convex hull: CCW vertex indices starting from the
/// lowest-then-leftmost point. Collinear boundary points are excluded.
/// Throws AllCollinear.
std::vector<Index> gift_wrap_hull(std::span<const Point> points);

/// Run every structural invariant check plus the Delaunay violation scan
/// (O(triangles x points)) and the hull comparison against gift_wrap_hull.
AuditReport audit(const Triangulation& t);

/// Undirected edge set of a triangle list, for oracle-vs-pipeline equality
/// checks. Pairs are (min,max)-ordered and sorted.
std::vector<std::pair<Index, Index>> edge_set(
    std::span<const std::array<Index, 3>> triangles);
std::vector<std::pair<Index, Index>> edge_set(const Triangulation& t);

}  // namespace sweephull::oracle
