#pragma once

#include <span>
#include <vector>

#include "sweephull/geometry.hpp"

namespace sweephull {

/// Initial triangle of the sweep: three distinct point indices in CCW order
/// plus their cached circumcircle, the center of which drives the resort.
struct SeedTriangle {
  Index i0 = kNoIndex;
  Index ij = kNoIndex;
  Index ik = kNoIndex;
  Point circumcenter;
  double radius_sq = 0.0;
};

/// A permutation of point indices with the squared-distance sort key stored
/// per position (keys[i] belongs to order[i]).
struct SweepOrder {
  std::vector<Index> order;
  std::vector<double> keys;
};

/// Deterministic seed choice: the point nearest the center of the bounding
/// box, ties broken by lowest index. Throws TooFewPoints below 3 points.
Index select_seed(std::span<const Point> points);

/// Stable sort of all indices by squared distance to origin; equal keys keep
/// input order.
SweepOrder radial_sort(std::span<const Point> points, Point origin);

struct PartnerResult {
  Index ik = kNoIndex;
  Circumcircle circle;
};

/// Among all candidates, find the one forming the smallest circumcircle with
/// points[i0] and points[ij]. `sorted` must be the radial order about
/// points[i0]: candidates are scanned in ascending distance from it and the
/// scan stops as soon as a candidate's distance exceeds the diameter of the
/// best circle so far (any circle through i0 and a farther candidate is at
/// least that large). Ties keep the earliest candidate, so the result is
/// identical to an exhaustive scan. Throws AllCollinear if every candidate is
/// collinear with i0 and ij.
PartnerResult find_min_circumcircle_partner(std::span<const Point> points,
                                            const SweepOrder& sorted, Index i0,
                                            Index ij);

struct SeedResult {
  SeedTriangle seed;
  SweepOrder order;
};

/// Full seeding pipeline: seed point, radial sort (with exact-duplicate
/// detection), nearest neighbour, smallest-circumcircle partner, CCW
/// orientation of the seed triangle, and the resort of all points about the
/// seed circumcenter. The returned order starts with the three seed vertices
/// in triangle order; the remainder is sorted by distance to the circumcenter.
/// Throws TooFewPoints, DuplicatePoints, AllCollinear.
SeedResult build_seed(std::span<const Point> points);

}  // namespace sweephull
