#include "sweephull/sweep.hpp"

#include <string>
#include <utility>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

// Callers guarantee CCW input: fan triangles over strictly visible edges and
// the two halves of an edge split.
Triangle make_triangle(std::span<const Point> pts, Index a, Index b, Index c) {
  Triangle t;
  t.v = {a, b, c};
  const Circumcircle cc = detail::circumcircle_unchecked(pts[a], pts[b], pts[c]);
  t.circumcenter = cc.center;
  t.radius_sq = cc.radius_sq;
  return t;
}

constexpr int kAngleBuckets = 256;

// Monotone stand-in for atan2 on [0, 1), cheap and branch-light.
double pseudo_angle(double dx, double dy) {
  const double den = std::abs(dx) + std::abs(dy);
  if (!(den > 0.0)) return 0.0;
  const double p = dx / den;
  return (dy > 0.0 ? 3.0 - p : 1.0 + p) / 4.0;
}

// p is within the collinearity band of edge (u,v); true when it projects
// strictly between the endpoints.
bool between_on_edge(Point u, Point v, Point p) {
  const double dx = v.x - u.x;
  const double dy = v.y - u.y;
  const double s = (p.x - u.x) * dx + (p.y - u.y) * dy;
  return s > 0.0 && s < dx * dx + dy * dy;
}

// Replace the triangle behind hull edge (u, next[u]) by two triangles that
// meet at p, which lies on that edge. Keeps the ring convex instead of
// creating a zero-area fan triangle.
int split_hull_edge(Triangulation& t, Index u, Index pi) {
  HullRing& hull = t.hull;
  const Index v = hull.next[u];
  const TriIndex bt = hull.edge_tri[u];
  const Triangle old = t.triangles[bt];
  const int e = old.edge_of(u, v);
  const Index apex = old.v[(e + 2) % 3];
  const TriIndex nbr_va = old.nbr[(e + 1) % 3];  // across (v, apex)
  const TriIndex nbr_au = old.nbr[(e + 2) % 3];  // across (apex, u)

  const TriIndex left = bt;  // reuse the slot for (u, p, apex)
  const TriIndex right = static_cast<TriIndex>(t.triangles.size());

  Triangle lt = make_triangle(t.points, u, pi, apex);
  lt.nbr = {kNoTri, right, nbr_au};
  t.triangles[left] = lt;

  Triangle rt = make_triangle(t.points, pi, v, apex);
  rt.nbr = {kNoTri, nbr_va, left};
  t.triangles.push_back(rt);

  if (nbr_va != kNoTri) {
    Triangle& n = t.triangles[nbr_va];
    n.nbr[n.edge_of(apex, v)] = right;
  }
  // nbr_au still points at the reused slot; nothing to patch there.

  hull.next[u] = pi;
  hull.prev[pi] = u;
  hull.next[pi] = v;
  hull.prev[v] = pi;
  hull.edge_tri[u] = left;
  hull.edge_tri[pi] = right;
  hull.size += 1;
  hull.start = pi;
  return 1;
}

}  // namespace

VisibleRun visible_edges(std::span<const Point> points, const HullRing& hull,
                         Point p, Index hint) {
  const auto classify = [&](Index u) {
    return orientation(points[u], points[hull.next[u]], p);
  };

  // Walk outward from the hint in both directions; with an angularly
  // coherent hint the first visible edge is a couple of steps away.
  const Index origin = (hint != kNoIndex && hull.contains(hint)) ? hint : hull.start;
  Index found = kNoIndex;
  Index on_edge_at = kNoIndex;
  const auto check = [&](Index u) {
    const Orientation o = classify(u);
    if (o == Orientation::Clockwise) {
      found = u;
      return true;
    }
    if (o == Orientation::Collinear && on_edge_at == kNoIndex &&
        between_on_edge(points[u], points[hull.next[u]], p)) {
      on_edge_at = u;
    }
    return false;
  };
  if (!check(origin)) {
    Index fwd = hull.next[origin];
    Index bwd = hull.prev[origin];
    for (Index step = 1; step < hull.size; ++step) {
      if (check(fwd)) break;
      if (bwd == fwd) break;  // both cursors met: every edge checked
      fwd = hull.next[fwd];
      if (check(bwd)) break;
      if (bwd == fwd) break;
      bwd = hull.prev[bwd];
    }
  }
  if (found == kNoIndex) {
    if (on_edge_at != kNoIndex) return {on_edge_at, 1, true};
    fail(ErrorCode::NoVisibleEdge,
         "point sees no hull facet (inside the hull?)");
  }

  // Expand to the maximal strictly visible run around the found edge.
  VisibleRun run{found, 1, false};
  Index back = hull.prev[run.first];
  while (run.count < hull.size && classify(back) == Orientation::Clockwise) {
    run.first = back;
    ++run.count;
    back = hull.prev[back];
  }
  Index fwd = hull.next[found];
  while (run.count < hull.size && classify(fwd) == Orientation::Clockwise) {
    ++run.count;
    fwd = hull.next[fwd];
  }
  if (run.count >= hull.size) {
    fail(ErrorCode::NoVisibleEdge, "visible run covers the whole ring");
  }
  return run;
}

int insert_point(Triangulation& t, Index pi, Index hint) {
  HullRing& hull = t.hull;
  const Point p = t.points[pi];
  const VisibleRun run = visible_edges(t.points, hull, p, hint);
  if (run.on_edge) return split_hull_edge(t, run.first, pi);

  TriIndex prev_new = kNoTri;
  TriIndex first_new = kNoTri;
  Index u = run.first;
  for (Index i = 0; i < run.count; ++i) {
    const Index v = hull.next[u];
    const TriIndex behind = hull.edge_tri[u];
    const TriIndex nt = static_cast<TriIndex>(t.triangles.size());

    Triangle tri = make_triangle(t.points, u, pi, v);
    tri.nbr = {prev_new, kNoTri, behind};
    t.triangles.push_back(tri);

    Triangle& b = t.triangles[behind];
    b.nbr[b.edge_of(u, v)] = nt;
    if (prev_new != kNoTri) t.triangles[prev_new].nbr[1] = nt;
    if (first_new == kNoTri) first_new = nt;
    prev_new = nt;
    u = v;
  }
  const Index last = u;

  // Replace the run with (first -> p -> last) on the ring.
  for (Index w = hull.next[run.first]; w != last;) {
    const Index nxt = hull.next[w];
    hull.next[w] = kNoIndex;
    hull.prev[w] = kNoIndex;
    hull.edge_tri[w] = kNoTri;
    w = nxt;
  }
  hull.next[run.first] = pi;
  hull.prev[pi] = run.first;
  hull.next[pi] = last;
  hull.prev[last] = pi;
  hull.edge_tri[run.first] = first_new;
  hull.edge_tri[pi] = prev_new;
  hull.size += 2 - run.count;
  hull.start = pi;
  return run.count;
}

SweepBuilder::SweepBuilder(std::vector<Point> points, bool validate_each_step)
    : validate_each_step_(validate_each_step) {
  const SeedResult sr = build_seed(points);
  seed_ = sr.seed;
  order_ = std::move(sr.order);
  tri_.points = std::move(points);
  // Final size is 2n - 2 - h; reserving 2n avoids every pool reallocation.
  tri_.triangles.reserve(2 * tri_.points.size());

  Triangle t0;
  t0.v = {seed_.i0, seed_.ij, seed_.ik};
  t0.circumcenter = seed_.circumcenter;
  t0.radius_sq = seed_.radius_sq;
  tri_.triangles.push_back(t0);

  const size_t n = tri_.points.size();
  HullRing& hull = tri_.hull;
  hull.next.assign(n, kNoIndex);
  hull.prev.assign(n, kNoIndex);
  hull.edge_tri.assign(n, kNoTri);
  for (int e = 0; e < 3; ++e) {
    const Index a = t0.v[e];
    const Index b = t0.v[(e + 1) % 3];
    hull.next[a] = b;
    hull.prev[b] = a;
    hull.edge_tri[a] = 0;
  }
  hull.start = seed_.i0;
  hull.size = 3;
  pos_ = 3;

  angle_slot_.assign(kAngleBuckets, kNoIndex);
  for (const Index v : t0.v) angle_slot_[bucket_of(tri_.points[v])] = v;
  if (validate_each_step_) validate();
}

int SweepBuilder::bucket_of(Point p) const {
  const double a =
      pseudo_angle(p.x - seed_.circumcenter.x, p.y - seed_.circumcenter.y);
  return static_cast<int>(a * kAngleBuckets) & (kAngleBuckets - 1);
}

Index SweepBuilder::hint_for(Point p) const {
  const int b = bucket_of(p);
  for (int delta = 0; delta < kAngleBuckets / 2; ++delta) {
    for (const int candidate : {b - delta, b + delta}) {
      const Index v = angle_slot_[candidate & (kAngleBuckets - 1)];
      if (v != kNoIndex && tri_.hull.contains(v)) return v;
      if (delta == 0) break;
    }
  }
  return tri_.hull.start;
}

int SweepBuilder::step() {
  const Index pi = order_.order[pos_++];
  const Point p = tri_.points[pi];
  const int added = insert_point(tri_, pi, hint_for(p));
  angle_slot_[bucket_of(p)] = pi;
  if (validate_each_step_) validate();
  return added;
}

void SweepBuilder::validate() const {
  const HullRing& hull = tri_.hull;
  Index u = hull.start;
  Index count = 0;
  do {
    const Index v = hull.next[u];
    if (v == kNoIndex || hull.prev[v] != u) {
      fail(ErrorCode::NoVisibleEdge, "hull ring links inconsistent");
    }
    if (orientation(tri_.points[u], tri_.points[v], tri_.points[hull.next[v]]) ==
        Orientation::Clockwise) {
      fail(ErrorCode::NoVisibleEdge, "hull ring is not convex");
    }
    const TriIndex bt = hull.edge_tri[u];
    if (bt == kNoTri || tri_.triangles[bt].edge_of(u, v) < 0) {
      fail(ErrorCode::NoVisibleEdge, "hull edge has no interior triangle");
    }
    u = v;
    if (++count > hull.size) {
      fail(ErrorCode::NoVisibleEdge, "hull ring size mismatch");
    }
  } while (u != hull.start);
  if (count != hull.size) {
    fail(ErrorCode::NoVisibleEdge, "hull ring size mismatch");
  }
}

Triangulation triangulate_nonoverlapping(std::vector<Point> points) {
  SweepBuilder builder(std::move(points));
  while (!builder.done()) builder.step();
  return std::move(builder).take();
}

}  // namespace sweephull
