#pragma once

#include <array>
#include <vector>

#include "sweephull/geometry.hpp"

namespace sweephull {

using TriIndex = std::int32_t;
inline constexpr TriIndex kNoTri = -1;

/// Triangle node of the triangle graph. Vertices are point indices in CCW
/// order; nbr[e] is the triangle across edge (v[e], v[(e+1)%3]), kNoTri on
/// boundary edges. The circumcircle is cached at construction and kept
/// current through flips.
struct Triangle {
  std::array<Index, 3> v{kNoIndex, kNoIndex, kNoIndex};
  std::array<TriIndex, 3> nbr{kNoTri, kNoTri, kNoTri};
  Point circumcenter;
  double radius_sq = 0.0;

  int edge_of(Index a, Index b) const {
    for (int e = 0; e < 3; ++e) {
      if (v[e] == a && v[(e + 1) % 3] == b) return e;
    }
    return -1;
  }
  int edge_to(TriIndex t) const {
    for (int e = 0; e < 3; ++e) {
      if (nbr[e] == t) return e;
    }
    return -1;
  }
};

/// Convex hull frontier as a circular doubly linked list over point indices.
/// next/prev/edge_tri are indexed by point index; a point not on the ring has
/// next == kNoIndex. edge_tri[u] is the interior triangle adjacent to the
/// directed hull edge (u, next[u]); that triangle contains the same directed
/// edge. `start` is some vertex on the ring and doubles as the insertion
/// cursor (the most recently added vertex).
struct HullRing {
  std::vector<Index> next;
  std::vector<Index> prev;
  std::vector<TriIndex> edge_tri;
  Index start = kNoIndex;
  Index size = 0;

  bool contains(Index u) const { return next[u] != kNoIndex; }
};

/// The triangle graph plus the hull frontier. After the sweep completes the
/// ring is the final convex hull boundary (it may contain vertices that are
/// collinear with their neighbours).
struct Triangulation {
  std::vector<Point> points;
  std::vector<Triangle> triangles;
  HullRing hull;

  /// Hull boundary as a CCW cycle of point indices, starting at hull.start.
  std::vector<Index> hull_cycle() const {
    std::vector<Index> cycle;
    if (hull.start == kNoIndex) return cycle;
    cycle.reserve(hull.size);
    Index u = hull.start;
    do {
      cycle.push_back(u);
      u = hull.next[u];
    } while (u != hull.start);
    return cycle;
  }
};

}  // namespace sweephull
