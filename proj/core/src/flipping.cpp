#include "sweephull/flipping.hpp"

#include <cstdint>
#include <utility>
#include <vector>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

std::uint64_t edge_key(Index a, Index b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

// Open-addressed per-edge flip counter. One increment per executed flip on a
// hot path, so this avoids node allocation entirely; counts saturate at 250.
// Key 0 never occurs (an edge key always has a nonzero vertex index in its
// low word).
class EdgeCounter {
 public:
  explicit EdgeCounter(size_t expected_edges) {
    size_t capacity = 1 << 12;
    while (capacity * 3 < expected_edges * 4) capacity *= 2;
    rehash(capacity);
  }

  void prefetch(std::uint64_t key) const {
    __builtin_prefetch(&keys_[slot(key)]);
  }

  int increment(std::uint64_t key) {
    if (size_ * 4 >= keys_.size() * 3) rehash(keys_.size() * 4);
    size_t i = slot(key);
    while (keys_[i] != 0 && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == 0) {
      keys_[i] = key;
      ++size_;
    }
    if (counts_[i] < 250) ++counts_[i];
    return counts_[i];
  }

 private:
  size_t slot(std::uint64_t key) const {
    return static_cast<size_t>((key * 0x9e3779b97f4a7c15ULL) >> 32) & mask_;
  }

  void rehash(size_t capacity) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint8_t> old_counts = std::move(counts_);
    keys_.assign(capacity, 0);
    counts_.assign(capacity, 0);
    mask_ = capacity - 1;
    for (size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == 0) continue;
      size_t j = slot(old_keys[i]);
      while (keys_[j] != 0) j = (j + 1) & mask_;
      keys_[j] = old_keys[i];
      counts_[j] = old_counts[i];
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> counts_;
  size_t mask_ = 0;
  size_t size_ = 0;
};

struct Quad {
  Index u, v;  // shared edge, directed as it appears in a
  Index c;     // apex of a
  Index d;     // apex of b
  int ea, eb;  // shared edge index in a and b
};

Quad quad_of(const Triangulation& t, TriIndex a, TriIndex b) {
  const int ea = shared_edge(t, a, b);
  const Triangle& ta = t.triangles[a];
  const Triangle& tb = t.triangles[b];
  Quad q;
  q.ea = ea;
  q.u = ta.v[ea];
  q.v = ta.v[(ea + 1) % 3];
  q.c = ta.v[(ea + 2) % 3];
  q.eb = tb.edge_of(q.v, q.u);
  if (q.eb < 0) fail(ErrorCode::NotAdjacent, "neighbour link is not mutual");
  q.d = tb.v[(q.eb + 2) % 3];
  return q;
}

// The in-circle decision plus the convexity guard, given the derived quad.
bool flip_wanted(const Triangulation& t, const Triangle& ta, const Quad& q) {
  const Point pd = t.points[q.d];
  const double diff = dist_sq(pd, ta.circumcenter) - ta.radius_sq;
  const double margin = kFlipPrefilterRelEps * ta.radius_sq;
  if (diff > margin) return false;
  if (diff >= -margin &&
      in_circumcircle(t.points[ta.v[0]], t.points[ta.v[1]], t.points[ta.v[2]],
                      pd) != CirclePosition::Inside) {
    return false;
  }
  // The replacement triangles (u,d,c) and (d,v,c) must both be CCW, i.e. the
  // union quadrilateral strictly convex, or the flip would fold the mesh.
  const Point pu = t.points[q.u];
  const Point pv = t.points[q.v];
  const Point pc = t.points[q.c];
  return orientation(pu, pd, pc) == Orientation::CounterClockwise &&
         orientation(pd, pv, pc) == Orientation::CounterClockwise;
}

// Rewires slots a and b to the flipped pair (u,d,c) / (d,v,c).
void flip_quad(Triangulation& t, TriIndex a, TriIndex b, const Quad& q) {
  const Triangle& ta = t.triangles[a];
  const Triangle& tb = t.triangles[b];
  const TriIndex nbr_vc = ta.nbr[(q.ea + 1) % 3];  // across (v, c)
  const TriIndex nbr_cu = ta.nbr[(q.ea + 2) % 3];  // across (c, u)
  const TriIndex nbr_ud = tb.nbr[(q.eb + 1) % 3];  // across (u, d)
  const TriIndex nbr_dv = tb.nbr[(q.eb + 2) % 3];  // across (d, v)

  Triangle na;
  na.v = {q.u, q.d, q.c};
  const Circumcircle ca =
      detail::circumcircle_unchecked(t.points[q.u], t.points[q.d], t.points[q.c]);
  na.circumcenter = ca.center;
  na.radius_sq = ca.radius_sq;
  na.nbr = {nbr_ud, b, nbr_cu};

  Triangle nb;
  nb.v = {q.d, q.v, q.c};
  const Circumcircle cb =
      detail::circumcircle_unchecked(t.points[q.d], t.points[q.v], t.points[q.c]);
  nb.circumcenter = cb.center;
  nb.radius_sq = cb.radius_sq;
  nb.nbr = {nbr_dv, nbr_vc, a};

  t.triangles[a] = na;
  t.triangles[b] = nb;

  if (nbr_ud != kNoTri) {
    Triangle& n = t.triangles[nbr_ud];
    n.nbr[n.edge_of(q.d, q.u)] = a;
  } else {
    t.hull.edge_tri[q.u] = a;  // boundary edge (u,d) moved from b to a
  }
  if (nbr_vc != kNoTri) {
    Triangle& n = t.triangles[nbr_vc];
    n.nbr[n.edge_of(q.c, q.v)] = b;
  } else {
    t.hull.edge_tri[q.v] = b;  // boundary edge (v,c) moved from a to b
  }
  // (c,u) stays with slot a and (d,v) stays with slot b.
}

}  // namespace

int shared_edge(const Triangulation& t, TriIndex a, TriIndex b) {
  const int e = t.triangles[a].edge_to(b);
  if (e < 0) fail(ErrorCode::NotAdjacent, "triangles do not share an edge");
  return e;
}

bool should_flip(const Triangulation& t, TriIndex a, TriIndex b) {
  const Quad q = quad_of(t, a, b);
  return flip_wanted(t, t.triangles[a], q);
}

void flip_edge(Triangulation& t, TriIndex a, TriIndex b) {
  const Quad q = quad_of(t, a, b);
  flip_quad(t, a, b, q);
}

FlipStats legalize(Triangulation& t, FlipLimits limits) {
  FlipStats stats;
  const int max_passes =
      limits.max_passes > 0 ? limits.max_passes
                            : 100 + static_cast<int>(t.points.size());

  // Uniform random inputs flip roughly 2.5 edges per triangle; sizing for
  // that up front makes counter growth a non-event.
  EdgeCounter flip_count(t.triangles.size() * 5 / 2);
  std::vector<std::uint64_t> cascade;
  cascade.reserve(256);
  const auto pack = [](TriIndex tri, int e) {
    return (static_cast<std::uint64_t>(tri) << 2) | static_cast<std::uint64_t>(e);
  };

  // Flip the edge at slot (a,e) if it violates the empty-circle condition.
  // On a flip the four outer edges of the quad are pushed for re-checking
  // while their neighbourhood is still cache-resident.
  long long flips_this_pass = 0;
  const auto maybe_flip = [&](TriIndex a, int e) {
    const Triangle& ta = t.triangles[a];
    const TriIndex b = ta.nbr[e];
    if (b == kNoTri) return;
    Quad q;
    q.ea = e;
    q.u = ta.v[e];
    q.v = ta.v[(e + 1) % 3];
    q.c = ta.v[(e + 2) % 3];
    const Triangle& tb = t.triangles[b];
    q.eb = tb.edge_of(q.v, q.u);
    q.d = tb.v[(q.eb + 2) % 3];
    const std::uint64_t key = edge_key(q.u, q.v);
    flip_count.prefetch(key);  // overlaps with the predicate work below
    if (!flip_wanted(t, ta, q)) return;

    const int count = flip_count.increment(key);
    if (count > limits.max_flips_per_pair) {
      // Frozen for the remainder of the run.
      if (count == limits.max_flips_per_pair + 1) ++stats.pairs_hit_limit;
      return;
    }
    flip_quad(t, a, b, q);
    ++flips_this_pass;
    cascade.push_back(pack(a, 0));
    cascade.push_back(pack(a, 2));
    cascade.push_back(pack(b, 0));
    cascade.push_back(pack(b, 1));
  };

  // Each pass sweeps every interior edge in pool order, draining the local
  // cascade as it goes; the pass after the last flip is a clean full sweep,
  // so termination is exactly the full-pass fixed point.
  while (stats.passes < max_passes) {
    ++stats.passes;
    flips_this_pass = 0;
    for (TriIndex a = 0; a < static_cast<TriIndex>(t.triangles.size()); ++a) {
      for (int e = 0; e < 3; ++e) {
        if (t.triangles[a].nbr[e] > a) maybe_flip(a, e);
      }
      while (!cascade.empty()) {
        const std::uint64_t item = cascade.back();
        cascade.pop_back();
        maybe_flip(static_cast<TriIndex>(item >> 2), static_cast<int>(item & 3));
      }
    }
    stats.flips_total += flips_this_pass;
    if (flips_this_pass == 0) break;
  }
  return stats;
}

}  // namespace sweephull
