#pragma once

#include "sweephull/triangulation.hpp"

namespace sweephull {

/// Outcome counters of a legalization run.
struct FlipStats {
  int passes = 0;
  long long flips_total = 0;
  int pairs_hit_limit = 0;
};

struct FlipLimits {
  /// A specific unordered vertex-pair edge flipped more often than this is
  /// frozen for the remainder of the run (degenerate-case guard).
  int max_flips_per_pair = 8;
  /// 0 means the default of 100 + point count.
  int max_passes = 0;
};

/// Margin, relative to the cached squared circumradius, inside which the
/// cheap cached-circle distance test defers to the full in-circle predicate.
inline constexpr double kFlipPrefilterRelEps = 1e-7;

/// Edge index in triangle a of the edge shared with b. Throws NotAdjacent.
int shared_edge(const Triangulation& t, TriIndex a, TriIndex b);

/// True when the diagonal shared by a and b should be replaced: the vertex of
/// b opposite the shared edge lies strictly inside the circumcircle of a.
/// Cocircular configurations (OnCircle) and pairs whose union quadrilateral
/// is not strictly convex never flip. The cached circumcircle of a is used as
/// a prefilter; the determinant runs only near the boundary.
bool should_flip(const Triangulation& t, TriIndex a, TriIndex b);

/// Replace the shared edge of (a,b) by the opposite diagonal. Both slots are
/// rewritten CCW, the four outer neighbour links (and any hull edge links)
/// are rewired, and both circumcircles are recomputed. Call only when
/// should_flip holds. Throws NotAdjacent.
void flip_edge(Triangulation& t, TriIndex a, TriIndex b);

/// Repeated passes over the interior edges, flipping until a pass performs no
/// flips or the pass limit is reached. Each pass revisits only edges whose
/// adjacent triangles changed in the previous pass, which reaches the same
/// fixed point as full passes. Guaranteed to terminate by the limits.
FlipStats legalize(Triangulation& t, FlipLimits limits = {});

}  // namespace sweephull
