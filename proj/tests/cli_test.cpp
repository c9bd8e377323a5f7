#include "lbk/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lbk/errors.hpp"
#include "lbk/fixtures.hpp"

namespace lbk {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lbk_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    tripod_ = (dir_ / "tripod.lbm").string();
    ASSERT_EQ(run({"fixture", "tree", "--ends", "3", "--lambda", "2", "-o", tripod_}).code, 0);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
  std::string tripod_;
};

TEST_F(CliTest, ValidateTripodExitsZero) {
  auto r = run({"validate", tripod_});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("VALID yes"), std::string::npos);
}

TEST_F(CliTest, SelectedAxiomsPassOnTripod) {
  auto r = run({"axioms", tripod_, "--only", "A6,EC,SE"});
  EXPECT_EQ(r.code, 0);
  for (const char* id : {"A6", "EC", "SE"}) {
    EXPECT_NE(r.out.find(std::string("summary axiom=") + id + " verdict=pass"), std::string::npos) << id;
  }
  EXPECT_EQ(r.out.find("axiom=A5"), std::string::npos);
  EXPECT_NE(r.out.find("result=pass"), std::string::npos);
}

TEST_F(CliTest, DistanceAcrossTheTripodChart) {
  auto r = run({"distance", tripod_, "chart:23 (1)", "chart:23 (-2)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
}

TEST_F(CliTest, SameSeedGivesIdenticalBytes) {
  auto a = run({"axioms", tripod_, "--samples", "40", "--seed", "9"});
  auto b = run({"axioms", tripod_, "--samples", "40", "--seed", "9"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.code, b.code);
}

TEST_F(CliTest, ExitCodeOneIffSomeVerdictFails) {
  std::string broken = (dir_ / "broken.lbm").string();
  ASSERT_EQ(run({"fixture", "broken-pair", "-o", broken}).code, 0);
  for (const auto& path : {tripod_, broken}) {
    auto r = run({"axioms", path, "--samples", "30"});
    EXPECT_EQ(r.code == 1, r.out.find("verdict=fail") != std::string::npos) << path;
  }
  EXPECT_EQ(run({"axioms", broken, "--only", "EC"}).code, 1);
}

TEST_F(CliTest, ReportGoesToOutputFile) {
  std::string report = (dir_ / "report.txt").string();
  auto r = run({"axioms", tripod_, "--only", "EC", "-o", report});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(report);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("AXIOM EC pair=(12,13) verdict=pass witness=23"), std::string::npos);
}

TEST_F(CliTest, UnknownVerbsAndFlagsAreRejected) {
  EXPECT_EQ(run({"explode", tripod_}).code, 2);
  EXPECT_EQ(run({"axioms", tripod_, "--frobnicate"}).code, 2);
  EXPECT_EQ(run({"axioms", tripod_, "--only", "A7"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"fixture", "octopus"}).code, 2);
}

TEST_F(CliTest, ParseErrorsCarryLineNumbers) {
  std::string bad = write("bad.lbm", "lambda 1\nroots A1\ncharts 2\nglue 1 3 : ge a1 0\n");
  auto r = run({"validate", bad});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 4"), std::string::npos) << r.err;
  EXPECT_EQ(run({"validate", (dir_ / "missing.lbm").string()}).code, 2);
}

TEST_F(CliTest, BudgetMakesSearchesInconclusive) {
  ::setenv("LBK_BUDGET", "3", 1);
  auto r = run({"axioms", tripod_, "--only", "A5"});
  ::unsetenv("LBK_BUDGET");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.out.find("result=inconclusive"), std::string::npos);
  ::setenv("LBK_BUDGET", "lots", 1);
  EXPECT_EQ(run({"axioms", tripod_}).code, 2);
  ::unsetenv("LBK_BUDGET");
}

TEST_F(CliTest, RetractionFoldsTheThirdEnd) {
  auto r = run({"retract", tripod_, "--germ", "chart:12 (0) / e", "chart:23 (1)", "chart:12 (5)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "23:(1|0) -> 12:(-1|0)\n12:(5|0) -> 12:(5|0)\n");
}

TEST_F(CliTest, InfinityReportsTheTripodBoundary) {
  auto r = run({"infinity", tripod_});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("chambers=3"), std::string::npos);
  EXPECT_NE(r.out.find("apartments=3"), std::string::npos);
}

TEST_F(CliTest, GalleryBetweenOppositeGerms) {
  auto r = run({"gallery", tripod_, "chart:12 (0) / e", "12:(0)/s1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "chart=12 delta=s1 length=1 gallery=s1\n");
}

TEST_F(CliTest, FixtureOutputIsDeterministic) {
  auto a = run({"fixture", "fan", "--leaves", "4", "--type", "B2"});
  auto b = run({"fixture", "fan", "--leaves", "4", "--type", "B2"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("roots B2"), std::string::npos);
}

TEST(CliLiterals, PointsAndSectors) {
  Atlas tripod = lambda_tree(3, 2);
  auto p = parse_building_point(tripod, "chart:23 (1/2|3)");
  EXPECT_EQ(tripod.name(p.chart), "23");
  EXPECT_EQ(to_string(p.point), "(1/2|3)");
  auto q = parse_building_point(tripod, "13:(0)");
  EXPECT_EQ(tripod.name(q.chart), "13");
  auto s = parse_building_sector(tripod, "12:(0)/s1");
  EXPECT_EQ(s.sector.direction.length(), 1);
  EXPECT_THROW(parse_building_point(tripod, "nowhere:(0)"), MalformedInput);
  EXPECT_THROW(parse_building_sector(tripod, "12:(0)/s2"), MalformedInput);
  EXPECT_EQ(short_string(parse_lambda("6|0", 2)), "6");
  EXPECT_EQ(short_string(parse_lambda("0|-1/2", 2)), "0|-1/2");
}

}  // namespace
}  // namespace lbk
