// Acceptance gate: one test per criterion, each printing a PASS/FAIL line.
// Run the whole suite with `ctest -R acceptance` (build in Release for the
// timing criterion).

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "sweephull/errors.hpp"
#include "sweephull/flipping.hpp"
#include "sweephull/generators.hpp"
#include "sweephull/io.hpp"
#include "sweephull/oracle.hpp"
#include "sweephull/pipeline.hpp"
#include "sweephull/seeding.hpp"
#include "sweephull/svg.hpp"
#include "sweephull/sweep.hpp"

namespace fs = std::filesystem;
using namespace sweephull;

namespace {

void report(int criterion, const char* name, bool ok) {
  std::printf("ACCEPTANCE %d %s: %s\n", criterion, ok ? "PASS" : "FAIL", name);
  std::fflush(stdout);
  EXPECT_TRUE(ok) << "criterion " << criterion << " (" << name << ")";
}

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

struct Instance {
  PointKind kind;
  int n;
  std::uint64_t seed;
};

// The shared matrix of "test instances" used by the structural criteria.
std::vector<Instance> structural_instances() {
  std::vector<Instance> out;
  for (const PointKind kind :
       {PointKind::Uniform, PointKind::Disk, PointKind::Clustered}) {
    for (const int n : {10, 100, 1000}) {
      for (const std::uint64_t seed : {1ULL, 2ULL}) out.push_back({kind, n, seed});
    }
  }
  for (const int n : {9, 100, 400}) out.push_back({PointKind::Grid, n, 0});
  for (const int n : {100, 256}) out.push_back({PointKind::Circle, n, 0});
  return out;
}

}  // namespace

TEST(Acceptance, C1_DelaunayCorrectness) {
  bool ok = true;
  for (const int n : {10, 50, 100, 500, 2000}) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const PipelineResult r =
          run_pipeline(generate(PointKind::Uniform, n, seed * 7919 + n));
      const auto rep = oracle::audit(r.tri);
      if (!rep.delaunay_violations.empty()) {
        ok = false;
        std::printf("  violation at n=%d seed=%llu\n", n,
                    static_cast<unsigned long long>(seed));
      }
    }
  }
  report(1, "delaunay correctness on 200x{10,50,100,500,2000} uniform sets", ok);
}

TEST(Acceptance, C2_OracleEquivalence) {
  bool ok = true;
  int compared = 0;
  for (std::uint64_t seed = 0; compared < 100 && seed < 1000; ++seed) {
    const int n = 4 + static_cast<int>(seed % 37);
    const auto pts = generate(PointKind::Uniform, n, seed + 50000);
    std::vector<std::array<Index, 3>> expected;
    try {
      expected = oracle::brute_force_delaunay(pts);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateCocircular) ok = false;
      continue;  // cocircular quadruple: excluded by the criterion
    }
    const PipelineResult r = run_pipeline(pts);
    if (oracle::edge_set(r.tri) != oracle::edge_set(expected)) {
      ok = false;
      std::printf("  edge set mismatch at seed=%llu n=%d\n",
                  static_cast<unsigned long long>(seed), n);
    }
    ++compared;
  }
  ok = ok && compared == 100;
  report(2, "pipeline edge set equals brute-force oracle on 100 sets (n<=40)", ok);
}

TEST(Acceptance, C3_StructuralInvariants) {
  bool ok = true;
  for (const Instance& inst : structural_instances()) {
    const auto pts = generate(inst.kind, inst.n, inst.seed);
    for (const bool flip : {false, true}) {
      PipelineOptions opt;
      opt.flip = flip;
      const PipelineResult r = run_pipeline(pts, opt);
      const auto rep = oracle::audit(r.tri);
      if (!rep.structural_ok()) {
        ok = false;
        std::printf(
            "  structural failure: kind=%s n=%d seed=%llu flip=%d "
            "(euler=%d manifold=%d adj=%d hull=%d ccw=%d cached=%d cover=%d "
            "area=%.3g)\n",
            to_string(inst.kind), inst.n,
            static_cast<unsigned long long>(inst.seed), flip, rep.euler_ok,
            rep.manifold_ok, rep.adjacency_ok, rep.hull_matches_oracle, rep.ccw_ok,
            rep.cached_circles_ok, rep.coverage_ok, rep.area_mismatch);
      }
    }
  }
  report(3, "euler/area/manifold/adjacency on all instances incl. pre-flip", ok);
}

TEST(Acceptance, C4_HullCorrectness) {
  bool ok = true;
  for (const Instance& inst : structural_instances()) {
    const PipelineResult r = run_pipeline(generate(inst.kind, inst.n, inst.seed));
    const auto rep = oracle::audit(r.tri);
    if (!rep.hull_matches_oracle) {
      ok = false;
      std::printf("  hull mismatch: kind=%s n=%d\n", to_string(inst.kind), inst.n);
    }
  }
  // The cocircular ring must keep every point on the hull.
  const auto circle = generate(PointKind::Circle, 100, 0);
  const PipelineResult r = run_pipeline(circle);
  ok = ok && r.tri.hull.size == 100 && oracle::gift_wrap_hull(circle).size() == 100;
  report(4, "hull cyclically equals gift-wrap oracle (incl. 100-point circle)", ok);
}

TEST(Acceptance, C5_DegenerateInputs) {
  bool ok = true;

  const auto expect_code = [&](std::vector<Point> pts, ErrorCode code) {
    try {
      run_pipeline(std::move(pts));
      ok = false;
    } catch (const Error& e) {
      if (e.code() != code) ok = false;
    }
  };
  expect_code(generate(PointKind::Collinear, 100, 0), ErrorCode::AllCollinear);
  expect_code({{0, 0}, {1, 1}}, ErrorCode::TooFewPoints);
  {
    auto pts = generate(PointKind::Uniform, 20, 3);
    pts.push_back(pts[5]);
    expect_code(std::move(pts), ErrorCode::DuplicatePoints);
  }

  // Grid lattices and cocircular rings terminate with a valid mesh.
  for (const Instance inst :
       {Instance{PointKind::Grid, 400, 0}, Instance{PointKind::Grid, 9, 0},
        Instance{PointKind::Circle, 256, 0}}) {
    const PipelineResult r = run_pipeline(generate(inst.kind, inst.n, inst.seed));
    const auto rep = oracle::audit(r.tri);
    if (!rep.ok()) ok = false;
    if (r.flips.pairs_hit_limit != 0) ok = false;
  }

  // No pair ever hits the flip limit on the non-adversarial generators.
  for (const Instance& inst : structural_instances()) {
    const PipelineResult r = run_pipeline(generate(inst.kind, inst.n, inst.seed));
    if (r.flips.pairs_hit_limit != 0) {
      ok = false;
      std::printf("  flip limit hit: kind=%s n=%d\n", to_string(inst.kind), inst.n);
    }
  }
  report(5, "degenerate inputs terminate with specified error or valid mesh", ok);
}

TEST(Acceptance, C6_Scaling) {
  const BenchReport rep = bench({1000, 10000, 100000, 1000000}, 3, 1);
  bool ok = rep.rows.size() == 4;
  if (ok) {
    std::printf("  n=%lld total=%.4fs\n", rep.rows[0].n, rep.rows[0].total_s);
    for (size_t i = 1; i < rep.rows.size(); ++i) {
      const double ratio =
          rep.rows[i].total_s / std::max(rep.rows[i - 1].total_s, 1e-9);
      std::printf("  n=%lld total=%.4fs decade ratio=%.2f\n", rep.rows[i].n,
                  rep.rows[i].total_s, ratio);
      if (ratio > 20.0) ok = false;
    }
    std::printf("  n=1000000 total=%.4fs (limit 60s)\n", rep.rows[3].total_s);
    if (rep.rows[3].total_s >= 60.0) ok = false;
  }
  report(6, "decade growth <= 20x from 1e3 to 1e6; 1e6 under 60 seconds", ok);
}

TEST(Acceptance, C7_EarlyExitEquivalence) {
  bool ok = true;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto pts = generate(PointKind::Uniform, 50, seed + 90000);
    const Index i0 = select_seed(pts);
    const SweepOrder sorted = radial_sort(pts, pts[i0]);
    const Index ij = sorted.order[1];
    const PartnerResult fast = find_min_circumcircle_partner(pts, sorted, i0, ij);

    Index best = kNoIndex;
    double best_r2 = std::numeric_limits<double>::infinity();
    for (const Index k : sorted.order) {
      if (k == i0 || k == ij) continue;
      if (orientation(pts[i0], pts[ij], pts[k]) == Orientation::Collinear) continue;
      const double r2 = circumcircle(pts[i0], pts[ij], pts[k]).radius_sq;
      if (r2 < best_r2) {
        best_r2 = r2;
        best = k;
      }
    }
    if (fast.ik != best) {
      ok = false;
      std::printf("  partner mismatch at seed=%llu\n",
                  static_cast<unsigned long long>(seed));
    }
  }
  report(7, "early-exit partner search matches exhaustive scan on 500 sets", ok);
}

TEST(Acceptance, C8_Determinism) {
  const fs::path dir =
      fs::temp_directory_path() / ("sweephull_acc8_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string pts = (dir / "pts.txt").string();
  const std::string a = (dir / "a.txt").string();
  const std::string b = (dir / "b.txt").string();
  write_points_file(pts, generate(PointKind::Uniform, 700, 17));

  const auto run_cli = [&](const std::string& out_path) {
    const std::string cmd = std::string(SWEEPHULL_CLI_PATH) + " triangulate --input " +
                            pts + " --output " + out_path + " >/dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  bool ok = run_cli(a) == 0 && run_cli(b) == 0;
  if (ok) {
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    ok = !sa.str().empty() && sa.str() == sb.str();
  }
  fs::remove_all(dir);
  report(8, "repeated runs produce bit-identical mesh files", ok);
}

TEST(Acceptance, C9_FigureStages) {
  const auto pts = generate(PointKind::Uniform, 100, 23);
  bool ok = true;

  // Seed stage: exactly one circle element (the seed circumcircle).
  {
    const SeedResult sr = build_seed(pts);
    std::stringstream ss;
    render_seed_svg(ss, pts, sr.seed);
    if (count_occurrences(ss.str(), "<circle") != 1) ok = false;
  }
  // Sweep step 1: red triangle count equals the first fan size, which equals
  // the visible-edge count of the first inserted point.
  {
    SweepBuilder builder(pts);
    const VisibleRun run =
        visible_edges(builder.state().points, builder.state().hull,
                      builder.state().points[builder.next_point()],
                      builder.state().hull.start);
    const TriIndex before = static_cast<TriIndex>(builder.state().triangles.size());
    const int added = builder.step();
    if (added != run.count) ok = false;
    std::stringstream ss;
    render_sweep_svg(ss, builder.state(), before);
    if (count_occurrences(ss.str(), "class=\"tri new\"") !=
        static_cast<size_t>(run.count)) {
      ok = false;
    }
  }
  // Final stage: one polygon per triangle.
  {
    const PipelineResult r = run_pipeline(pts);
    std::stringstream ss;
    render_final_svg(ss, r.tri);
    if (count_occurrences(ss.str(), "class=\"tri\"") != r.tri.triangles.size()) {
      ok = false;
    }
  }
  report(9, "svg stages render with the specified element counts", ok);
}
