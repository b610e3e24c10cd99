#include <benchmark/benchmark.h>

#include "sweephull/flipping.hpp"
#include "sweephull/generators.hpp"
#include "sweephull/geometry.hpp"
#include "sweephull/seeding.hpp"
#include "sweephull/sweep.hpp"

using namespace sweephull;

static void bm_orientation(benchmark::State& state) {
  const std::vector<Point> pts = generate(PointKind::Uniform, 3000, 7);
  size_t i = 0;
  for (auto _ : state) {
    const Orientation o = orientation(pts[i], pts[i + 1], pts[i + 2]);
    benchmark::DoNotOptimize(o);
    i = (i + 3) % (pts.size() - 3);
  }
}
BENCHMARK(bm_orientation);

static void bm_in_circumcircle(benchmark::State& state) {
  const std::vector<Point> pts = generate(PointKind::Uniform, 4000, 7);
  size_t i = 0;
  for (auto _ : state) {
    const CirclePosition c = in_circumcircle(pts[i], pts[i + 1], pts[i + 2], pts[i + 3]);
    benchmark::DoNotOptimize(c);
    i = (i + 4) % (pts.size() - 4);
  }
}
BENCHMARK(bm_in_circumcircle);

static void bm_radial_sort(benchmark::State& state) {
  const std::vector<Point> pts =
      generate(PointKind::Uniform, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_sort(pts, {500.0, 500.0}));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_radial_sort)->Range(1 << 10, 1 << 18)->Complexity();

static void bm_sweep(benchmark::State& state) {
  const std::vector<Point> pts =
      generate(PointKind::Uniform, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(triangulate_nonoverlapping(pts));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_sweep)->Range(1 << 10, 1 << 18)->Complexity();

static void bm_sweep_and_flip(benchmark::State& state) {
  const std::vector<Point> pts =
      generate(PointKind::Uniform, static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    Triangulation t = triangulate_nonoverlapping(pts);
    benchmark::DoNotOptimize(legalize(t));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_sweep_and_flip)->Range(1 << 10, 1 << 18)->Complexity();

BENCHMARK_MAIN();
