#include "sweephull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "sweephull/errors.hpp"

// Reference implementations, deliberately naive and coded independently of
// the geometry kernel so that a disagreement points at a real bug rather
// than at shared arithmetic.

namespace sweephull::oracle {

namespace {

constexpr double kRelEps = 1e-12;   // collinearity band, mirrors the kernel value
constexpr double kCircleTol = 1e-9; // in/on/out band relative to r^2

// -1 right turn, 0 collinear (within band), +1 left turn.
int turn_sign(Point a, Point b, Point c) {
  const double l = (b.x - a.x) * (c.y - a.y);
  const double r = (b.y - a.y) * (c.x - a.x);
  const double det = l - r;
  if (std::abs(det) <= kRelEps * (std::abs(l) + std::abs(r))) return 0;
  return det > 0.0 ? 1 : -1;
}

// Circumcenter from the two perpendicular-bisector equations in absolute
// coordinates (Cramer), radius from the distance to the first point.
bool circum(Point a, Point b, Point c, Point* center, double* r2) {
  if (turn_sign(a, b, c) == 0) return false;
  const double a11 = 2.0 * (b.x - a.x), a12 = 2.0 * (b.y - a.y);
  const double a21 = 2.0 * (c.x - a.x), a22 = 2.0 * (c.y - a.y);
  const double b1 = (b.x * b.x + b.y * b.y) - (a.x * a.x + a.y * a.y);
  const double b2 = (c.x * c.x + c.y * c.y) - (a.x * a.x + a.y * a.y);
  const double det = a11 * a22 - a12 * a21;
  center->x = (b1 * a22 - b2 * a12) / det;
  center->y = (a11 * b2 - a21 * b1) / det;
  const double dx = a.x - center->x;
  const double dy = a.y - center->y;
  *r2 = dx * dx + dy * dy;
  return true;
}

double sq(double v) { return v * v; }

std::uint64_t ukey(Index a, Index b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

bool cyclic_equal(const std::vector<Index>& a, const std::vector<Index>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  const auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  const size_t off = static_cast<size_t>(it - b.begin());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[(off + i) % b.size()]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::array<Index, 3>> brute_force_delaunay(std::span<const Point> points) {
  const Index n = static_cast<Index>(points.size());
  if (n < 3) fail(ErrorCode::TooFewPoints, "oracle needs at least 3 points");
  std::vector<std::array<Index, 3>> out;
  Point center;
  double r2 = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      for (Index k = j + 1; k < n; ++k) {
        if (!circum(points[i], points[j], points[k], &center, &r2)) continue;
        bool empty = true;
        bool boundary = false;
        for (Index p = 0; p < n && empty; ++p) {
          if (p == i || p == j || p == k) continue;
          const double d2 = sq(points[p].x - center.x) + sq(points[p].y - center.y);
          if (d2 < r2 * (1.0 - kCircleTol)) {
            empty = false;
          } else if (d2 <= r2 * (1.0 + kCircleTol)) {
            boundary = true;
          }
        }
        if (!empty) continue;
        if (boundary) {
          fail(ErrorCode::DegenerateCocircular,
               "four cocircular points: the Delaunay triangulation is ambiguous");
        }
        std::array<Index, 3> tri{i, j, k};
        if (turn_sign(points[i], points[j], points[k]) < 0) std::swap(tri[1], tri[2]);
        out.push_back(tri);
      }
    }
  }
  return out;
}

std::vector<Index> gift_wrap_hull(std::span<const Point> points) {
  const Index n = static_cast<Index>(points.size());
  if (n < 3) fail(ErrorCode::TooFewPoints, "hull oracle needs at least 3 points");
  bool any_turn = false;
  for (Index i = 2; i < n && !any_turn; ++i) {
    any_turn = turn_sign(points[0], points[1], points[i]) != 0;
  }
  if (!any_turn) fail(ErrorCode::AllCollinear, "all points are collinear");

  Index start = 0;
  for (Index i = 1; i < n; ++i) {
    if (points[i].y < points[start].y ||
        (points[i].y == points[start].y && points[i].x < points[start].x)) {
      start = i;
    }
  }
  std::vector<Index> hull;
  Index cur = start;
  do {
    hull.push_back(cur);
    Index best = (cur == 0) ? 1 : 0;
    for (Index q = 0; q < n; ++q) {
      if (q == cur || q == best) continue;
      const int s = turn_sign(points[cur], points[best], points[q]);
      if (s < 0) {
        best = q;
      } else if (s == 0) {
        // Collinear: keep the farthest so intermediate points drop out.
        const double db = sq(points[best].x - points[cur].x) +
                          sq(points[best].y - points[cur].y);
        const double dq = sq(points[q].x - points[cur].x) +
                          sq(points[q].y - points[cur].y);
        if (dq > db) best = q;
      }
    }
    cur = best;
    if (static_cast<Index>(hull.size()) > n) {
      fail(ErrorCode::AllCollinear, "gift wrap failed to close");
    }
  } while (cur != start);
  return hull;
}

AuditReport audit(const Triangulation& t) {
  AuditReport rep;
  const auto& pts = t.points;
  const auto& tris = t.triangles;
  const Index n = static_cast<Index>(pts.size());

  // Orientation and cached circumcircles.
  rep.ccw_ok = true;
  rep.cached_circles_ok = true;
  for (const Triangle& tr : tris) {
    if (turn_sign(pts[tr.v[0]], pts[tr.v[1]], pts[tr.v[2]]) <= 0) rep.ccw_ok = false;
    Point c;
    double r2 = 0.0;
    if (!circum(pts[tr.v[0]], pts[tr.v[1]], pts[tr.v[2]], &c, &r2)) {
      rep.cached_circles_ok = false;
      continue;
    }
    const double scale = std::max(r2, 1e-300);
    if (std::abs(r2 - tr.radius_sq) > 1e-9 * scale ||
        sq(c.x - tr.circumcenter.x) + sq(c.y - tr.circumcenter.y) >
            sq(1e-9) * scale) {
      rep.cached_circles_ok = false;
    }
  }

  // Mutual adjacency.
  rep.adjacency_ok = true;
  for (TriIndex a = 0; a < static_cast<TriIndex>(tris.size()); ++a) {
    for (int e = 0; e < 3; ++e) {
      const TriIndex b = tris[a].nbr[e];
      if (b == kNoTri) continue;
      if (b < 0 || b >= static_cast<TriIndex>(tris.size())) {
        rep.adjacency_ok = false;
        continue;
      }
      const int f = tris[b].edge_of(tris[a].v[(e + 1) % 3], tris[a].v[e]);
      if (f < 0 || tris[b].nbr[f] != a) rep.adjacency_ok = false;
    }
  }

  // Manifold edges: every undirected edge in one or two triangles, and the
  // single-triangle edges must be exactly the hull boundary.
  std::unordered_map<std::uint64_t, int> edge_count;
  for (const Triangle& tr : tris) {
    for (int e = 0; e < 3; ++e) edge_count[ukey(tr.v[e], tr.v[(e + 1) % 3])]++;
  }
  const std::vector<Index> ring = t.hull_cycle();
  rep.manifold_ok = true;
  size_t boundary_edges = 0;
  for (const auto& [key, count] : edge_count) {
    if (count == 1) {
      ++boundary_edges;
    } else if (count != 2) {
      rep.manifold_ok = false;
    }
  }
  if (boundary_edges != ring.size()) rep.manifold_ok = false;
  for (size_t i = 0; i < ring.size() && rep.manifold_ok; ++i) {
    const auto it = edge_count.find(ukey(ring[i], ring[(i + 1) % ring.size()]));
    if (it == edge_count.end() || it->second != 1) rep.manifold_ok = false;
  }

  // Euler count with h = boundary vertex count (collinear vertices included).
  rep.euler_ok = static_cast<long long>(tris.size()) ==
                 2LL * n - 2 - static_cast<long long>(ring.size());

  // Every input point must be used.
  std::vector<char> used(n, 0);
  for (const Triangle& tr : tris) {
    for (const Index v : tr.v) {
      if (v >= 0 && v < n) used[v] = 1;
    }
  }
  rep.coverage_ok = std::all_of(used.begin(), used.end(), [](char u) { return u; });

  // Non-overlap: triangle areas must sum to the hull polygon area.
  long double tri_area = 0.0L;
  for (const Triangle& tr : tris) {
    const Point a = pts[tr.v[0]], b = pts[tr.v[1]], c = pts[tr.v[2]];
    tri_area += 0.5L * (static_cast<long double>(b.x - a.x) * (c.y - a.y) -
                        static_cast<long double>(b.y - a.y) * (c.x - a.x));
  }
  long double hull_area = 0.0L;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Point a = pts[ring[i]];
    const Point b = pts[ring[(i + 1) % ring.size()]];
    hull_area += 0.5L * (static_cast<long double>(a.x) * b.y -
                         static_cast<long double>(b.x) * a.y);
  }
  rep.area_mismatch =
      hull_area != 0.0L
          ? static_cast<double>(std::abs(tri_area - hull_area) / std::abs(hull_area))
          : (tri_area == 0.0L ? 0.0 : 1.0);

  // Hull vs gift wrap. The ring may keep vertices that are collinear with
  // their neighbours (they carry boundary triangles); the oracle excludes
  // them, so compare the strict corners cyclically and require the ring to
  // never turn clockwise.
  rep.hull_matches_oracle = true;
  std::vector<Index> corners;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Index p = ring[(i + ring.size() - 1) % ring.size()];
    const Index u = ring[i];
    const Index nx = ring[(i + 1) % ring.size()];
    const int s = turn_sign(pts[p], pts[u], pts[nx]);
    if (s < 0) rep.hull_matches_oracle = false;
    if (s > 0) corners.push_back(u);
  }
  try {
    const std::vector<Index> wrapped = gift_wrap_hull(pts);
    if (!cyclic_equal(corners, wrapped)) rep.hull_matches_oracle = false;
  } catch (const Error&) {
    rep.hull_matches_oracle = false;
  }

  // Delaunay violation scan against recomputed circumcircles.
  constexpr size_t kMaxRecorded = 1000;
  for (TriIndex a = 0; a < static_cast<TriIndex>(tris.size()); ++a) {
    Point c;
    double r2 = 0.0;
    if (!circum(pts[tris[a].v[0]], pts[tris[a].v[1]], pts[tris[a].v[2]], &c, &r2)) {
      continue;  // already reported by ccw_ok
    }
    for (Index p = 0; p < n; ++p) {
      if (p == tris[a].v[0] || p == tris[a].v[1] || p == tris[a].v[2]) continue;
      const double d2 = sq(pts[p].x - c.x) + sq(pts[p].y - c.y);
      if (d2 < r2 * (1.0 - kCircleTol)) {
        if (rep.delaunay_violations.size() < kMaxRecorded) {
          rep.delaunay_violations.emplace_back(a, p);
        } else {
          return rep;
        }
      }
    }
  }
  return rep;
}

std::vector<std::pair<Index, Index>> edge_set(
    std::span<const std::array<Index, 3>> triangles) {
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(triangles.size() * 3);
  for (const auto& tr : triangles) {
    for (int e = 0; e < 3; ++e) {
      Index a = tr[e];
      Index b = tr[(e + 1) % 3];
      if (a > b) std::swap(a, b);
      edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::vector<std::pair<Index, Index>> edge_set(const Triangulation& t) {
  std::vector<std::array<Index, 3>> tris;
  tris.reserve(t.triangles.size());
  for (const Triangle& tr : t.triangles) tris.push_back(tr.v);
  return edge_set(tris);
}

}  // namespace sweephull::oracle
