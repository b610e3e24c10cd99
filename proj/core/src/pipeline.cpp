#include "sweephull/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <unordered_set>
#include <utility>

#include "sweephull/errors.hpp"
#include "sweephull/generators.hpp"
#include "sweephull/sweep.hpp"

namespace sweephull {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct PointHash {
  size_t operator()(const Point& p) const {
    const std::uint64_t hx = std::bit_cast<std::uint64_t>(p.x);
    const std::uint64_t hy = std::bit_cast<std::uint64_t>(p.y);
    return std::hash<std::uint64_t>{}(hx ^ (hy * 0x9e3779b97f4a7c15ULL));
  }
};

std::string line_context(const std::vector<int>* lines, Index i) {
  if (!lines || i < 0 || static_cast<size_t>(i) >= lines->size()) {
    return "point " + std::to_string(i);
  }
  return "point " + std::to_string(i) + " (input line " +
         std::to_string((*lines)[i]) + ")";
}

}  // namespace

PipelineResult run_pipeline(std::vector<Point> points, const PipelineOptions& options) {
  PipelineResult result;
  if (options.dedup) {
    std::unordered_set<Point, PointHash> seen;
    std::vector<Point> unique;
    unique.reserve(points.size());
    for (Index i = 0; i < static_cast<Index>(points.size()); ++i) {
      if (seen.insert(points[i]).second) {
        unique.push_back(points[i]);
        result.kept.push_back(i);
      }
    }
    if (unique.size() == points.size()) {
      result.kept.clear();
    } else {
      points = std::move(unique);
    }
  }

  try {
    const auto t0 = std::chrono::steady_clock::now();
    result.tri = triangulate_nonoverlapping(std::move(points));
    result.build_seconds = seconds_since(t0);
    if (options.flip) {
      const auto t1 = std::chrono::steady_clock::now();
      result.flips = legalize(result.tri, options.limits);
      result.flip_seconds = seconds_since(t1);
    }
  } catch (const Error& e) {
    if (e.index_a >= 0 && options.input_lines) {
      Error ctx(e.code(), std::string(e.what()) + " [" +
                              line_context(options.input_lines, e.index_b) +
                              " matches " +
                              line_context(options.input_lines, e.index_a) + "]");
      ctx.index_a = e.index_a;
      ctx.index_b = e.index_b;
      throw ctx;
    }
    throw;
  }
  return result;
}

BenchReport bench(const std::vector<long long>& sizes, int repeats, std::uint64_t seed) {
  if (sizes.empty()) fail(ErrorCode::UsageError, "bench needs at least one size");
  if (repeats < 1) fail(ErrorCode::UsageError, "repeats must be at least 1");
  BenchReport report;
  report.repeats = repeats;
  report.seed = seed;
  for (const long long n : sizes) {
    const std::vector<Point> pts =
        generate(PointKind::Uniform, static_cast<int>(n), seed);
    std::vector<BenchRow> runs;
    runs.reserve(static_cast<size_t>(repeats));
    for (int r = 0; r < repeats; ++r) {
      PipelineResult res = run_pipeline(pts);
      BenchRow row;
      row.n = n;
      row.build_s = res.build_seconds;
      row.flip_s = res.flip_seconds;
      row.total_s = res.build_seconds + res.flip_seconds;
      row.triangles = static_cast<long long>(res.tri.triangles.size());
      row.passes = res.flips.passes;
      runs.push_back(row);
    }
    std::sort(runs.begin(), runs.end(),
              [](const BenchRow& a, const BenchRow& b) { return a.total_s < b.total_s; });
    report.rows.push_back(runs[runs.size() / 2]);
  }
  return report;
}

void print_bench(std::ostream& out, const BenchReport& report) {
  out << "# triangulation benchmark: uniform random points, seed " << report.seed
      << ", median of " << report.repeats << " run(s)\n"
      << "# timings include the radial sort and exclude all file I/O\n";
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%10s %12s %12s %12s %12s %8s\n", "n",
                "build_s", "flip_s", "total_s", "triangles", "passes");
  out << buf;
  for (const BenchRow& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "%10lld %12.6f %12.6f %12.6f %12lld %8d\n", r.n,
                  r.build_s, r.flip_s, r.total_s, r.triangles, r.passes);
    out << buf;
  }
  out << "\ncsv:n,build_s,flip_s,total_s,triangles,passes\n";
  for (const BenchRow& r : report.rows) {
    std::snprintf(buf, sizeof(buf), "csv:%lld,%.9f,%.9f,%.9f,%lld,%d\n", r.n,
                  r.build_s, r.flip_s, r.total_s, r.triangles, r.passes);
    out << buf;
  }
}

}  // namespace sweephull
