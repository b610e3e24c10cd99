// End-to-end tests of the command-line interface and its file formats.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "sweephull/io.hpp"

namespace fs = std::filesystem;
using namespace sweephull;

namespace {

const char* cli_path() { return SWEEPHULL_CLI_PATH; }

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sweephull_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = std::string(cli_path()) + " " + args + " >" +
                            out.string() + " 2>" + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenTriangulateVerifyRoundTrip) {
  ASSERT_EQ(run("gen --kind uniform --n 200 --seed 11 --output " + path("pts.txt"))
                .exit_code,
            0);
  EXPECT_EQ(read_points_file(path("pts.txt")).size(), 200u);

  const RunResult tri = run("triangulate --input " + path("pts.txt") +
                            " --output " + path("mesh.txt"));
  ASSERT_EQ(tri.exit_code, 0);
  EXPECT_NE(tri.out.find("triangles="), std::string::npos);

  const RunResult ver =
      run("verify --input " + path("pts.txt") + " --mesh " + path("mesh.txt"));
  EXPECT_EQ(ver.exit_code, 0);
  EXPECT_NE(ver.out.find("verification OK"), std::string::npos);
}

TEST_F(CliTest, DeterministicMeshBytes) {
  ASSERT_EQ(run("gen --kind uniform --n 500 --seed 3 --output " + path("pts.txt"))
                .exit_code,
            0);
  ASSERT_EQ(run("triangulate --input " + path("pts.txt") + " --output " +
                path("a.txt"))
                .exit_code,
            0);
  ASSERT_EQ(run("triangulate --input " + path("pts.txt") + " --output " +
                path("b.txt"))
                .exit_code,
            0);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
  EXPECT_FALSE(slurp(path("a.txt")).empty());
}

TEST_F(CliTest, NoFlipMeshFailsDelaunayVerification) {
  ASSERT_EQ(run("gen --kind uniform --n 300 --seed 5 --output " + path("pts.txt"))
                .exit_code,
            0);
  ASSERT_EQ(run("triangulate --no-flip --input " + path("pts.txt") +
                " --output " + path("mesh.txt"))
                .exit_code,
            0);
  const RunResult ver =
      run("verify --input " + path("pts.txt") + " --mesh " + path("mesh.txt"));
  EXPECT_NE(ver.exit_code, 0);
  EXPECT_NE(ver.out.find("verification FAILED"), std::string::npos);
}

TEST_F(CliTest, CollinearInputReportsErrorCode) {
  ASSERT_EQ(
      run("gen --kind collinear --n 50 --seed 0 --output " + path("pts.txt"))
          .exit_code,
      0);
  const RunResult tri = run("triangulate --input " + path("pts.txt") +
                            " --output " + path("mesh.txt"));
  EXPECT_NE(tri.exit_code, 0);
  EXPECT_NE(tri.err.find("error: AllCollinear"), std::string::npos);
}

TEST_F(CliTest, DuplicatesRejectedUnlessDedup) {
  {
    std::ofstream out(path("pts.txt"));
    out << "0 0\n5 0\n0 5\n3 3\n5 0\n";
  }
  const RunResult fail = run("triangulate --input " + path("pts.txt") +
                             " --output " + path("mesh.txt"));
  EXPECT_NE(fail.exit_code, 0);
  EXPECT_NE(fail.err.find("error: DuplicatePoints"), std::string::npos);
  EXPECT_NE(fail.err.find("line 5"), std::string::npos);

  const RunResult ok = run("triangulate --dedup --input " + path("pts.txt") +
                           " --output " + path("mesh.txt"));
  EXPECT_EQ(ok.exit_code, 0);
  const RunResult ver =
      run("verify --input " + path("pts.txt") + " --mesh " + path("mesh.txt"));
  EXPECT_EQ(ver.exit_code, 0);
}

TEST_F(CliTest, TooFewPointsErrors) {
  {
    std::ofstream out(path("pts.txt"));
    out << "0 0\n1 1\n";
  }
  const RunResult tri = run("triangulate --input " + path("pts.txt") +
                            " --output " + path("mesh.txt"));
  EXPECT_NE(tri.exit_code, 0);
  EXPECT_NE(tri.err.find("error: TooFewPoints"), std::string::npos);
}

TEST_F(CliTest, SvgStages) {
  ASSERT_EQ(run("gen --kind uniform --n 100 --seed 9 --output " + path("pts.txt"))
                .exit_code,
            0);
  for (const std::string stage : {"seed", "step1", "step5", "final"}) {
    const RunResult tri =
        run("triangulate --input " + path("pts.txt") + " --output " +
            path("mesh.txt") + " --svg " + path(stage + ".svg") + " --stage " + stage);
    EXPECT_EQ(tri.exit_code, 0) << stage << ": " << tri.err;
    const std::string svg = slurp(path(stage + ".svg"));
    EXPECT_NE(svg.find("<svg"), std::string::npos) << stage;
    EXPECT_NE(svg.find("</svg>"), std::string::npos) << stage;
  }
  const RunResult bad =
      run("triangulate --input " + path("pts.txt") + " --output " +
          path("mesh.txt") + " --svg " + path("x.svg") + " --stage step9999");
  EXPECT_NE(bad.exit_code, 0);
  EXPECT_NE(bad.err.find("error: UsageError"), std::string::npos);
}

TEST_F(CliTest, BenchEmitsCsvRows) {
  const RunResult ben = run("bench --sizes 100,1000 --repeats 2 --seed 4");
  EXPECT_EQ(ben.exit_code, 0);
  EXPECT_NE(ben.out.find("csv:n,build_s,flip_s,total_s,triangles,passes"),
            std::string::npos);
  EXPECT_NE(ben.out.find("csv:1000,"), std::string::npos);
}

TEST_F(CliTest, MismatchedMeshRejected) {
  ASSERT_EQ(run("gen --kind uniform --n 50 --seed 1 --output " + path("a.txt"))
                .exit_code,
            0);
  ASSERT_EQ(run("gen --kind uniform --n 50 --seed 2 --output " + path("b.txt"))
                .exit_code,
            0);
  ASSERT_EQ(run("triangulate --input " + path("a.txt") + " --output " +
                path("mesh.txt"))
                .exit_code,
            0);
  const RunResult ver =
      run("verify --input " + path("b.txt") + " --mesh " + path("mesh.txt"));
  EXPECT_NE(ver.exit_code, 0);
  EXPECT_NE(ver.err.find("error: MeshMismatch"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitNonzero) {
  EXPECT_NE(run("triangulate").exit_code, 0);
  EXPECT_NE(run("frobnicate").exit_code, 0);
  EXPECT_NE(run("gen --kind hexagonal --n 5 --output " + path("x.txt")).exit_code, 0);
}
