#include "sweephull/generators.hpp"

#include <gtest/gtest.h>

#include "sweephull/errors.hpp"

using namespace sweephull;

TEST(Generate, DeterministicForFixedSeed) {
  for (const PointKind kind :
       {PointKind::Uniform, PointKind::Disk, PointKind::Circle, PointKind::Grid,
        PointKind::Collinear, PointKind::Clustered}) {
    const auto a = generate(kind, 100, 42);
    const auto b = generate(kind, 100, 42);
    EXPECT_EQ(a, b) << to_string(kind);
    EXPECT_EQ(a.size(), 100u);
  }
}

TEST(Generate, DifferentSeedsDiffer) {
  EXPECT_NE(generate(PointKind::Uniform, 100, 1), generate(PointKind::Uniform, 100, 2));
}

TEST(Generate, CirclePointsAreCocircular) {
  const auto pts = generate(PointKind::Circle, 100, 0);
  const Point center{500.0, 500.0};
  const double r = 450.0;
  for (const Point& p : pts) {
    EXPECT_NEAR(std::sqrt(dist_sq(p, center)), r, 1e-12 * r);
  }
}

TEST(Generate, GridIsIntegerLattice) {
  const auto pts = generate(PointKind::Grid, 9, 0);
  ASSERT_EQ(pts.size(), 9u);
  for (int i = 0; i < 9; ++i) {
    EXPECT_EQ(pts[i].x, static_cast<double>(i % 3));
    EXPECT_EQ(pts[i].y, static_cast<double>(i / 3));
  }
}

TEST(Generate, CollinearIsExactlyCollinear) {
  const auto pts = generate(PointKind::Collinear, 50, 0);
  for (size_t i = 2; i < pts.size(); ++i) {
    EXPECT_EQ(orientation(pts[0], pts[1], pts[i]), Orientation::Collinear);
  }
}

TEST(Generate, KindParsing) {
  EXPECT_EQ(parse_kind("uniform"), PointKind::Uniform);
  EXPECT_EQ(parse_kind("clustered"), PointKind::Clustered);
  try {
    parse_kind("hexagonal");
    FAIL() << "expected UsageError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UsageError);
  }
}
