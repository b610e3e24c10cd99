// Command-line front end: triangulate / verify / gen / bench.

#include <cstdio>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "sweephull/errors.hpp"
#include "sweephull/generators.hpp"
#include "sweephull/io.hpp"
#include "sweephull/oracle.hpp"
#include "sweephull/pipeline.hpp"
#include "sweephull/svg.hpp"
#include "sweephull/sweep.hpp"

namespace {

using namespace sweephull;

struct TriangulateArgs {
  std::string input;
  std::string output;
  std::string svg;
  std::string stage = "final";
  bool dedup = false;
  bool no_flip = false;
};

int parse_step(const std::string& stage) {
  if (stage.rfind("step", 0) != 0) return -1;
  const std::string num = stage.substr(4);
  if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos) {
    fail(ErrorCode::UsageError, "bad stage '" + stage + "'");
  }
  return std::stoi(num);
}

void render_stage(const TriangulateArgs& args, const Triangulation& tri) {
  if (args.stage == "final") {
    render_final_svg_file(args.svg, tri);
    return;
  }
  if (args.stage == "seed") {
    const SeedResult sr = build_seed(tri.points);
    render_seed_svg_file(args.svg, tri.points, sr.seed);
    return;
  }
  const int step = parse_step(args.stage);
  if (step < 1) fail(ErrorCode::UsageError, "bad stage '" + args.stage + "'");
  SweepBuilder builder(tri.points);
  for (int i = 1; i < step; ++i) {
    if (builder.done()) {
      fail(ErrorCode::UsageError,
           "stage " + args.stage + " exceeds the number of sweep steps");
    }
    builder.step();
  }
  if (builder.done()) {
    fail(ErrorCode::UsageError,
         "stage " + args.stage + " exceeds the number of sweep steps");
  }
  const TriIndex first_new = static_cast<TriIndex>(builder.state().triangles.size());
  builder.step();
  render_sweep_svg_file(args.svg, builder.state(), first_new);
}

int run_triangulate(const TriangulateArgs& args) {
  std::vector<int> lines;
  std::vector<Point> points = read_points_file(args.input, &lines);

  PipelineOptions opt;
  opt.dedup = args.dedup;
  opt.flip = !args.no_flip;
  opt.input_lines = &lines;
  const PipelineResult result = run_pipeline(std::move(points), opt);

  write_mesh_file(args.output, to_mesh_file(result.tri));
  if (!args.svg.empty()) render_stage(args, result.tri);

  std::printf(
      "points=%zu triangles=%zu hull=%d flips=%lld passes=%d build_s=%.6f flip_s=%.6f\n",
      result.tri.points.size(), result.tri.triangles.size(), result.tri.hull.size,
      result.flips.flips_total, result.flips.passes, result.build_seconds,
      result.flip_seconds);
  if (!result.kept.empty()) {
    std::printf("dedup: kept %zu of %zu input points\n", result.kept.size(),
                lines.size());
  }
  return 0;
}

int run_verify(const std::string& input, const std::string& mesh_path) {
  const std::vector<Point> points = read_points_file(input);
  const MeshFile mesh = read_mesh_file(mesh_path);

  bool points_match = mesh.points.size() == points.size() && mesh.points == points;
  if (!points_match) {
    // A mesh produced with --dedup keeps the first occurrence of each point.
    std::vector<Point> unique;
    std::unordered_set<std::string> seen;
    for (const Point& p : points) {
      char key[64];
      std::snprintf(key, sizeof(key), "%.17g,%.17g", p.x, p.y);
      if (seen.insert(key).second) unique.push_back(p);
    }
    points_match = mesh.points == unique;
  }
  if (!points_match) {
    fail(ErrorCode::MeshMismatch, "mesh points do not match the input point set");
  }

  const Triangulation t = from_mesh_file(mesh);
  const oracle::AuditReport rep = oracle::audit(t);
  std::printf("ccw: %s\n", rep.ccw_ok ? "ok" : "FAIL");
  std::printf("cached circumcircles: %s\n", rep.cached_circles_ok ? "ok" : "FAIL");
  std::printf("adjacency: %s\n", rep.adjacency_ok ? "ok" : "FAIL");
  std::printf("manifold: %s\n", rep.manifold_ok ? "ok" : "FAIL");
  std::printf("euler count: %s\n", rep.euler_ok ? "ok" : "FAIL");
  std::printf("point coverage: %s\n", rep.coverage_ok ? "ok" : "FAIL");
  std::printf("area mismatch: %.3g %s\n", rep.area_mismatch,
              rep.area_mismatch <= 1e-9 ? "(ok)" : "(FAIL)");
  std::printf("hull vs gift wrap: %s\n", rep.hull_matches_oracle ? "ok" : "FAIL");
  std::printf("delaunay violations: %zu\n", rep.delaunay_violations.size());
  for (size_t i = 0; i < rep.delaunay_violations.size() && i < 10; ++i) {
    std::printf("  triangle %d contains point %d\n", rep.delaunay_violations[i].first,
                rep.delaunay_violations[i].second);
  }
  if (!rep.ok()) {
    std::printf("verification FAILED\n");
    return 1;
  }
  std::printf("verification OK\n");
  return 0;
}

std::vector<long long> parse_sizes(const std::string& csv) {
  std::vector<long long> sizes;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string::npos) comma = csv.size();
    const std::string tok = csv.substr(pos, comma - pos);
    try {
      sizes.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::UsageError, "bad size '" + tok + "'");
    }
    if (sizes.back() < 3) fail(ErrorCode::UsageError, "sizes must be at least 3");
    pos = comma + 1;
  }
  return sizes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D Delaunay triangulation via a radially swept convex hull"};
  app.require_subcommand(1);

  TriangulateArgs tri_args;
  CLI::App* tri = app.add_subcommand("triangulate", "Triangulate a point file");
  tri->add_option("--input", tri_args.input, "Point file")->required();
  tri->add_option("--output", tri_args.output, "Mesh output file")->required();
  tri->add_option("--svg", tri_args.svg, "SVG output file");
  tri->add_option("--stage", tri_args.stage,
                  "SVG stage: seed, final, or stepN (default final)");
  tri->add_flag("--dedup", tri_args.dedup, "Drop exact duplicate points first");
  tri->add_flag("--no-flip", tri_args.no_flip,
                "Stop after the sweep (non-overlapping pre-flip mesh)");

  std::string verify_input, verify_mesh;
  CLI::App* ver = app.add_subcommand("verify", "Audit a mesh against its points");
  ver->add_option("--input", verify_input, "Point file")->required();
  ver->add_option("--mesh", verify_mesh, "Mesh file")->required();

  std::string gen_kind = "uniform", gen_output;
  int gen_n = 100;
  std::uint64_t gen_seed = 0;
  CLI::App* gen = app.add_subcommand("gen", "Generate a point file");
  gen->add_option("--kind", gen_kind,
                  "uniform|disk|circle|grid|collinear|clustered");
  gen->add_option("--n", gen_n, "Point count")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--output", gen_output, "Point file to write")->required();

  std::string bench_sizes = "1000,10000,100000";
  int bench_repeats = 3;
  std::uint64_t bench_seed = 1;
  CLI::App* ben = app.add_subcommand("bench", "Time triangulation at several sizes");
  ben->add_option("--sizes", bench_sizes, "Comma-separated point counts");
  ben->add_option("--repeats", bench_repeats, "Runs per size (median reported)");
  ben->add_option("--seed", bench_seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << "\n";
    return 1;
  }

  try {
    if (tri->parsed()) return run_triangulate(tri_args);
    if (ver->parsed()) return run_verify(verify_input, verify_mesh);
    if (gen->parsed()) {
      const std::vector<Point> pts = generate(parse_kind(gen_kind), gen_n, gen_seed);
      write_points_file(gen_output, pts);
      std::printf("wrote %zu points to %s\n", pts.size(), gen_output.c_str());
      return 0;
    }
    if (ben->parsed()) {
      const BenchReport report = bench(parse_sizes(bench_sizes), bench_repeats, bench_seed);
      print_bench(std::cout, report);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
