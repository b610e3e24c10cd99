#include "sweephull/pipeline.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "sweephull/errors.hpp"
#include "sweephull/generators.hpp"
#include "sweephull/oracle.hpp"
#include "test_util.hpp"

using namespace sweephull;

TEST(Pipeline, ThreePointsOneTriangleNoFlips) {
  const PipelineResult r = run_pipeline({{0, 0}, {3, 0}, {1, 2}});
  EXPECT_EQ(r.tri.triangles.size(), 1u);
  EXPECT_EQ(r.flips.flips_total, 0);
  EXPECT_GE(r.flips.passes, 1);
}

TEST(Pipeline, UniformThousandMatchesEulerAndAudit) {
  const auto pts = generate(PointKind::Uniform, 1000, 7);
  const PipelineResult r = run_pipeline(pts);
  const auto hull = oracle::gift_wrap_hull(pts);
  EXPECT_EQ(static_cast<long long>(r.tri.triangles.size()),
            2LL * 1000 - 2 - static_cast<long long>(hull.size()));
  EXPECT_TRUE(oracle::audit(r.tri).ok());
}

TEST(Pipeline, CollinearInputFails) {
  const auto pts = generate(PointKind::Collinear, 40, 0);
  try {
    run_pipeline(pts);
    FAIL() << "expected AllCollinear";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AllCollinear);
  }
}

TEST(Pipeline, DuplicateErrorCarriesLineContext) {
  auto pts = test_util::random_points(10, 70);
  pts.push_back(pts[4]);
  std::vector<int> lines;
  for (int i = 0; i < static_cast<int>(pts.size()); ++i) lines.push_back(10 + i);
  PipelineOptions opt;
  opt.input_lines = &lines;
  try {
    run_pipeline(pts, opt);
    FAIL() << "expected DuplicatePoints";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DuplicatePoints);
    EXPECT_NE(std::string(e.what()).find("line 20"), std::string::npos);  // dup
    EXPECT_NE(std::string(e.what()).find("line 14"), std::string::npos);  // original
  }
}

TEST(Pipeline, DedupKeepsFirstOccurrences) {
  auto pts = test_util::random_points(50, 71);
  pts.push_back(pts[3]);
  pts.push_back(pts[14]);
  PipelineOptions opt;
  opt.dedup = true;
  const PipelineResult r = run_pipeline(pts, opt);
  EXPECT_EQ(r.tri.points.size(), 50u);
  EXPECT_EQ(r.kept.size(), 50u);
  EXPECT_TRUE(oracle::audit(r.tri).ok());
}

TEST(Pipeline, NoFlipStopsAfterSweep) {
  const auto pts = generate(PointKind::Uniform, 300, 9);
  PipelineOptions opt;
  opt.flip = false;
  const PipelineResult r = run_pipeline(pts, opt);
  EXPECT_EQ(r.flips.flips_total, 0);
  EXPECT_EQ(r.flip_seconds, 0.0);
  EXPECT_TRUE(oracle::audit(r.tri).structural_ok());
}

TEST(Bench, RowsAreDeterministicPerSeed) {
  const BenchReport rep = bench({100, 1000}, 2, 5);
  ASSERT_EQ(rep.rows.size(), 2u);
  EXPECT_EQ(rep.rows[0].n, 100);
  EXPECT_EQ(rep.rows[1].n, 1000);
  const BenchReport rep2 = bench({100, 1000}, 2, 5);
  EXPECT_EQ(rep.rows[0].triangles, rep2.rows[0].triangles);
  EXPECT_EQ(rep.rows[1].triangles, rep2.rows[1].triangles);
  EXPECT_EQ(rep.rows[0].passes, rep2.rows[0].passes);
}

TEST(Bench, TotalsNondecreasingAtDecadeRatios) {
  const BenchReport rep = bench({100, 1000, 10000}, 3, 6);
  ASSERT_EQ(rep.rows.size(), 3u);
  EXPECT_LE(rep.rows[0].total_s, rep.rows[1].total_s);
  EXPECT_LE(rep.rows[1].total_s, rep.rows[2].total_s);
}

TEST(Bench, PrintsTableAndCsvRows) {
  const BenchReport rep = bench({100}, 1, 3);
  std::stringstream ss;
  print_bench(ss, rep);
  const std::string text = ss.str();
  EXPECT_NE(text.find("# timings include the radial sort"), std::string::npos);
  EXPECT_NE(text.find("csv:n,build_s,flip_s,total_s,triangles,passes"),
            std::string::npos);
  EXPECT_NE(text.find("csv:100,"), std::string::npos);
}
