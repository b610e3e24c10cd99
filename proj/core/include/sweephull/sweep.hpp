#pragma once

#include <span>
#include <vector>

#include "sweephull/seeding.hpp"
#include "sweephull/triangulation.hpp"

namespace sweephull {

/// Maximal contiguous run of hull edges visible from a point. Edges are
/// (w, next[w]) starting at `first`; `count` is the number of edges. When
/// `on_edge` is true the point lies on the single returned hull edge (within
/// the collinearity band) and must be absorbed by splitting it.
struct VisibleRun {
  Index first = kNoIndex;
  Index count = 0;
  bool on_edge = false;
};

/// Find the run of hull edges strictly visible from p (orientation(u, next[u],
/// p) clockwise), searching the ring from `hint`. If no edge is strictly
/// visible but p lies on a hull edge, that edge is returned with on_edge set.
/// Throws NoVisibleEdge otherwise (p inside the hull: a sweep-order
/// violation).
VisibleRun visible_edges(std::span<const Point> points, const HullRing& hull,
                         Point p, Index hint = kNoIndex);

/// Add point p_index to the triangulation: one new CCW triangle per visible
/// edge, fan-linked and linked to the interior triangles behind those edges,
/// with the hull ring rewired through the new point. A point on a hull edge
/// splits the triangle behind that edge instead. Returns the net number of
/// triangles added. `hint` seeds the visibility search (any ring vertex is
/// valid; it never changes the result). Throws NoVisibleEdge via
/// visible_edges.
int insert_point(Triangulation& t, Index p_index, Index hint = kNoIndex);

/// Step-by-step sweep over the radial order, exposed so callers can snapshot
/// intermediate states (rendering, invariant checks). Inserting all points
/// yields the same result as triangulate_nonoverlapping.
class SweepBuilder {
 public:
  /// Seeds the triangulation. `validate_each_step` re-checks ring convexity
  /// and link consistency after every insertion (test use; O(h) per step).
  explicit SweepBuilder(std::vector<Point> points, bool validate_each_step = false);

  bool done() const { return pos_ >= order_.order.size(); }
  /// Number of sweep insertions performed so far (seed not counted).
  int steps_done() const { return static_cast<int>(pos_) - 3; }
  /// Insert the next point; returns the number of triangles added.
  int step();
  /// Index of the point the next step will insert.
  Index next_point() const { return order_.order[pos_]; }

  const Triangulation& state() const { return tri_; }
  const SeedTriangle& seed() const { return seed_; }
  const SweepOrder& order() const { return order_; }
  Triangulation take() && { return std::move(tri_); }

 private:
  void validate() const;
  int bucket_of(Point p) const;
  Index hint_for(Point p) const;

  Triangulation tri_;
  SeedTriangle seed_;
  SweepOrder order_;
  size_t pos_ = 0;
  bool validate_each_step_ = false;
  // Hull vertices bucketed by pseudo-angle about the seed circumcenter, so
  // the visibility search starts near the edge facing the inserted point.
  std::vector<Index> angle_slot_;
};

/// Run the full sweep: seed, then insert every point in radial order about
/// the seed circumcenter. The result is a non-overlapping triangulation with
/// its convex hull; no edge flipping has been applied.
Triangulation triangulate_nonoverlapping(std::vector<Point> points);

}  // namespace sweephull
