#include "sweephull/seeding.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "sweephull/errors.hpp"

namespace sweephull {

namespace {

// Exact coordinate duplicates share a sort key, so it suffices to look inside
// runs of equal keys.
void check_duplicates(std::span<const Point> points, const SweepOrder& sorted) {
  const size_t n = sorted.order.size();
  std::vector<Index> run;
  size_t i = 0;
  while (i < n) {
    size_t j = i + 1;
    while (j < n && sorted.keys[j] == sorted.keys[i]) ++j;
    if (j - i > 1) {
      run.assign(sorted.order.begin() + i, sorted.order.begin() + j);
      std::sort(run.begin(), run.end(), [&](Index a, Index b) {
        const Point& pa = points[a];
        const Point& pb = points[b];
        if (pa.x != pb.x) return pa.x < pb.x;
        if (pa.y != pb.y) return pa.y < pb.y;
        return a < b;
      });
      for (size_t k = 0; k + 1 < run.size(); ++k) {
        if (points[run[k]] == points[run[k + 1]]) {
          fail(ErrorCode::DuplicatePoints,
               "point " + std::to_string(run[k + 1]) + " duplicates point " +
                   std::to_string(run[k]),
               run[k], run[k + 1]);
        }
      }
    }
    i = j;
  }
}

}  // namespace

Index select_seed(std::span<const Point> points) {
  if (points.size() < 3) {
    fail(ErrorCode::TooFewPoints,
         "need at least 3 points, got " + std::to_string(points.size()));
  }
  double min_x = points[0].x, max_x = points[0].x;
  double min_y = points[0].y, max_y = points[0].y;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const Point center{min_x + 0.5 * (max_x - min_x), min_y + 0.5 * (max_y - min_y)};
  Index best = 0;
  double best_d = dist_sq(points[0], center);
  for (Index i = 1; i < static_cast<Index>(points.size()); ++i) {
    const double d = dist_sq(points[i], center);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

SweepOrder radial_sort(std::span<const Point> points, Point origin) {
  const size_t n = points.size();
  // Keys are kept inline with the indices so the sort never gathers.
  std::vector<std::pair<double, Index>> keyed(n);
  for (size_t i = 0; i < n; ++i) {
    keyed[i] = {dist_sq(points[i], origin), static_cast<Index>(i)};
  }
  // Index tie-break makes this equivalent to a stable sort on the key alone.
  std::sort(keyed.begin(), keyed.end());
  SweepOrder s;
  s.order.resize(n);
  s.keys.resize(n);
  for (size_t i = 0; i < n; ++i) {
    s.keys[i] = keyed[i].first;
    s.order[i] = keyed[i].second;
  }
  return s;
}

PartnerResult find_min_circumcircle_partner(std::span<const Point> points,
                                            const SweepOrder& sorted, Index i0,
                                            Index ij) {
  const Point p0 = points[i0];
  const Point p1 = points[ij];
  PartnerResult best;
  double best_r2 = std::numeric_limits<double>::infinity();
  for (size_t pos = 0; pos < sorted.order.size(); ++pos) {
    const Index k = sorted.order[pos];
    if (k == i0 || k == ij) continue;
    // sorted.keys[pos] is |x_k - x_0|^2; a circle through x_0 and x_k has
    // diameter at least that chord, so once the chord beats the best
    // diameter no later candidate can win.
    if (best.ik != kNoIndex && sorted.keys[pos] > 4.0 * best_r2) break;
    if (orientation(p0, p1, points[k]) == Orientation::Collinear) continue;
    const Circumcircle cc = circumcircle(p0, p1, points[k]);
    if (cc.radius_sq < best_r2) {
      best_r2 = cc.radius_sq;
      best.ik = k;
      best.circle = cc;
    }
  }
  if (best.ik == kNoIndex) {
    fail(ErrorCode::AllCollinear,
         "every candidate is collinear with the seed edge");
  }
  return best;
}

SeedResult build_seed(std::span<const Point> points) {
  const Index i0 = select_seed(points);
  const SweepOrder about_seed = radial_sort(points, points[i0]);
  check_duplicates(points, about_seed);
  // The first entry that is not the seed itself is the nearest neighbour
  // (lowest index among ties, by sort stability).
  Index ij = about_seed.order[0] != i0 ? about_seed.order[0] : about_seed.order[1];
  const PartnerResult partner =
      find_min_circumcircle_partner(points, about_seed, i0, ij);

  SeedTriangle seed;
  seed.i0 = i0;
  seed.ij = ij;
  seed.ik = partner.ik;
  if (orientation(points[seed.i0], points[seed.ij], points[seed.ik]) ==
      Orientation::Clockwise) {
    std::swap(seed.ij, seed.ik);
  }
  seed.circumcenter = partner.circle.center;
  seed.radius_sq = partner.circle.radius_sq;

  SweepOrder about_center = radial_sort(points, seed.circumcenter);
  SweepOrder order;
  order.order.reserve(points.size());
  order.keys.reserve(points.size());
  order.order = {seed.i0, seed.ij, seed.ik};
  order.keys = {dist_sq(points[seed.i0], seed.circumcenter),
                dist_sq(points[seed.ij], seed.circumcenter),
                dist_sq(points[seed.ik], seed.circumcenter)};
  for (size_t pos = 0; pos < about_center.order.size(); ++pos) {
    const Index i = about_center.order[pos];
    if (i == seed.i0 || i == seed.ij || i == seed.ik) continue;
    order.order.push_back(i);
    order.keys.push_back(about_center.keys[pos]);
  }
  return {seed, std::move(order)};
}

}  // namespace sweephull
