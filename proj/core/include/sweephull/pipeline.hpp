#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "sweephull/flipping.hpp"
#include "sweephull/triangulation.hpp"

namespace sweephull {

struct PipelineOptions {
  /// Remove exact coordinate duplicates before seeding (first occurrence
  /// kept). Off by default: the library rejects duplicates.
  bool dedup = false;
  /// Stop after the sweep, leaving the non-overlapping pre-flip mesh.
  bool flip = true;
  FlipLimits limits{};
  /// 1-based source lines per input point; used to add file context to
  /// errors. May be null.
  const std::vector<int>* input_lines = nullptr;
};

struct PipelineResult {
  Triangulation tri;
  FlipStats flips;
  double build_seconds = 0.0;  // seeding + radial sort + sweep
  double flip_seconds = 0.0;
  /// Original index of each kept point when dedup removed something;
  /// empty when the input was used as-is.
  std::vector<Index> kept;
};

/// Compose seeding -> sweep -> flipping, timing construction and flipping
/// separately (wall clock; no file I/O inside).
PipelineResult run_pipeline(std::vector<Point> points, const PipelineOptions& options = {});

struct BenchRow {
  long long n = 0;
  double build_s = 0.0;
  double flip_s = 0.0;
  double total_s = 0.0;
  long long triangles = 0;
  int passes = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int repeats = 0;
  std::uint64_t seed = 0;
};

/// Median-of-repeats timings on uniform random input per requested size.
BenchReport bench(const std::vector<long long>& sizes, int repeats, std::uint64_t seed);

/// Aligned human-readable table followed by machine-readable CSV rows.
void print_bench(std::ostream& out, const BenchReport& report);

}  // namespace sweephull
