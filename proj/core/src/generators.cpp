#include "sweephull/generators.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "sweephull/errors.hpp"

namespace sweephull {

PointKind parse_kind(const std::string& name) {
  if (name == "uniform") return PointKind::Uniform;
  if (name == "disk") return PointKind::Disk;
  if (name == "circle") return PointKind::Circle;
  if (name == "grid") return PointKind::Grid;
  if (name == "collinear") return PointKind::Collinear;
  if (name == "clustered") return PointKind::Clustered;
  fail(ErrorCode::UsageError, "unknown point kind '" + name + "'");
}

const char* to_string(PointKind kind) {
  switch (kind) {
    case PointKind::Uniform: return "uniform";
    case PointKind::Disk: return "disk";
    case PointKind::Circle: return "circle";
    case PointKind::Grid: return "grid";
    case PointKind::Collinear: return "collinear";
    case PointKind::Clustered: return "clustered";
  }
  return "unknown";
}

std::vector<Point> generate(PointKind kind, int n, std::uint64_t seed) {
  if (n < 1) fail(ErrorCode::UsageError, "point count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Point> pts;
  pts.reserve(static_cast<size_t>(n));

  switch (kind) {
    case PointKind::Uniform:
      for (int i = 0; i < n; ++i) {
        pts.push_back({1000.0 * unit(rng), 1000.0 * unit(rng)});
      }
      break;
    case PointKind::Disk:
      for (int i = 0; i < n; ++i) {
        const double r = 500.0 * std::sqrt(unit(rng));
        const double a = 2.0 * std::numbers::pi * unit(rng);
        pts.push_back({500.0 + r * std::cos(a), 500.0 + r * std::sin(a)});
      }
      break;
    case PointKind::Circle: {
      // Evenly spaced with a seed-dependent phase: exactly cocircular up to
      // the rounding of cos/sin.
      const double phase = unit(rng);
      for (int i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * (i + phase) / n;
        pts.push_back({500.0 + 450.0 * std::cos(a), 500.0 + 450.0 * std::sin(a)});
      }
      break;
    }
    case PointKind::Grid: {
      const int side = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (int i = 0; i < n; ++i) {
        pts.push_back({static_cast<double>(i % side), static_cast<double>(i / side)});
      }
      break;
    }
    case PointKind::Collinear:
      for (int i = 0; i < n; ++i) {
        pts.push_back({static_cast<double>(i), 2.0 * i + 1.0});
      }
      break;
    case PointKind::Clustered: {
      const int clusters = std::max(1, n / 50);
      std::vector<Point> centers;
      centers.reserve(static_cast<size_t>(clusters));
      for (int c = 0; c < clusters; ++c) {
        centers.push_back({1000.0 * unit(rng), 1000.0 * unit(rng)});
      }
      std::normal_distribution<double> spread(0.0, 15.0);
      for (int i = 0; i < n; ++i) {
        const Point& c = centers[static_cast<size_t>(i) % centers.size()];
        pts.push_back({c.x + spread(rng), c.y + spread(rng)});
      }
      break;
    }
  }
  return pts;
}

}  // namespace sweephull
