#pragma once

#include <random>
#include <vector>

#include "sweephull/geometry.hpp"

namespace test_util {

using sweephull::Point;

inline std::vector<Point> random_points(int n, std::uint64_t seed,
                                        double extent = 1000.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, extent);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
  return pts;
}

// Random triple that is decisively non-collinear: normalized area above
// 1e-6 so the predicate deadband never makes the triple itself ambiguous.
inline std::array<Point, 3> random_triangle(std::mt19937_64& rng,
                                            double extent = 1000.0) {
  std::uniform_real_distribution<double> d(0.0, extent);
  while (true) {
    const Point a{d(rng), d(rng)}, b{d(rng), d(rng)}, c{d(rng), d(rng)};
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    if (std::abs(l - r) > 1e-6 * (std::abs(l) + std::abs(r))) return {a, b, c};
  }
}

}  // namespace test_util
