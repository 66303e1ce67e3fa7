#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "rtspan/cli.hpp"

namespace rtspan {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spanner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

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
           ("rtspan_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

  fs::path dir_;
};

TEST_F(CliTest, GenBuildVerifyPipeline) {
  for (const std::string algo : {"basic", "strong"}) {
    for (const std::string model : {"gnp-bidirected", "gnp-directed", "layered", "cycle"}) {
      ASSERT_EQ(cli({"gen", "--model", model, "--n", "25", "--p", "0.2", "--wmin", "1", "--wmax", "100", "--seed",
                     "4", "--output", path("g.txt")})
                    .code,
                0);
      const CliRun build = cli({"build", "--input", path("g.txt"), "--k", "2", "--algo", algo, "--output",
                             path("s.txt"), "--stats", path("build.json")});
      ASSERT_EQ(build.code, 0) << build.err;
      const CliRun verify = cli({"verify", "--graph", path("g.txt"), "--spanner", path("s.txt"), "--k", "2", "--stats",
                              path("verify.json")});
      EXPECT_EQ(verify.code, 0) << verify.out << verify.err;
      EXPECT_NE(verify.out.find("violations=0"), std::string::npos);

      const auto b = nlohmann::json::parse(slurp(path("build.json")));
      EXPECT_EQ(b["algorithm"], algo);
      EXPECT_EQ(b["n"], 25);
      EXPECT_EQ(b["k"], 2);
      const auto v = nlohmann::json::parse(slurp(path("verify.json")));
      EXPECT_EQ(v["violations"], 0);
      EXPECT_EQ(v["spanner_edges"], b["spanner_edges"]);
      EXPECT_LE(v["max_stretch"].get<double>(), 3.0);
    }
  }
}

TEST_F(CliTest, BrokenSpannerFailsVerification) {
  write("g.txt", "3 3\n0 1 1\n1 2 1\n2 0 1\n");
  write("s.txt", "3 2\n0 1 1\n1 2 1\n");
  const CliRun r = cli({"verify", "--graph", path("g.txt"), "--spanner", path("s.txt"), "--k", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violations=3"), std::string::npos);
}

TEST_F(CliTest, ForeignSpannerEdgeIsAnInputError) {
  write("g.txt", "3 3\n0 1 1\n1 2 1\n2 0 1\n");
  write("s.txt", "3 1\n1 0 1\n");
  EXPECT_EQ(cli({"verify", "--graph", path("g.txt"), "--spanner", path("s.txt"), "--k", "2"}).code, 2);
}

TEST_F(CliTest, MalformedInputReportsLine) {
  write("bad.txt", "2 1\n0 2 1\n");
  const CliRun r = cli({"build", "--input", path("bad.txt"), "--k", "2", "--algo", "basic", "--output", path("o.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("o.txt")));
}

TEST_F(CliTest, LightWeightsNeedRescale) {
  write("g.txt", "2 2\n0 1 0.5\n1 0 0.25\n");
  EXPECT_EQ(cli({"build", "--input", path("g.txt"), "--k", "2", "--algo", "basic", "--output", path("o.txt")}).code,
            2);
  ASSERT_EQ(cli({"build", "--input", path("g.txt"), "--k", "2", "--algo", "basic", "--output", path("o.txt"),
                 "--rescale"})
                .code,
            0);
  // The spanner keeps the file's own weights.
  EXPECT_EQ(slurp(path("o.txt")), "2 2\n0 1 0.5\n1 0 0.25\n");
  EXPECT_EQ(
      cli({"verify", "--graph", path("g.txt"), "--spanner", path("o.txt"), "--k", "2", "--rescale"}).code, 0);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"build", "--input", path("g.txt"), "--k", "2", "--algo", "fast", "--output", path("o")}).code, 2);
  EXPECT_EQ(cli({"build", "--input", path("missing.txt"), "--k", "2", "--algo", "basic", "--output", path("o")}).code,
            2);
  EXPECT_EQ(cli({"gen", "--model", "erdos", "--n", "5", "--seed", "1", "--output", path("g")}).code, 2);
  EXPECT_EQ(cli({"gen", "--model", "cycle", "--n", "5", "--seed", "1", "--output", path("g"), "--wmin", "0.5"}).code,
            2);
  write("g.txt", "1 0\n");
  EXPECT_EQ(cli({"build", "--input", path("g.txt"), "--k", "0", "--algo", "basic", "--output", path("o")}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST_F(CliTest, StatsSummary) {
  write("g.txt", "4 5\n0 1 2\n1 0 3\n1 2 1\n2 1 1\n2 3 9\n");
  const CliRun r = cli({"stats", "--graph", path("g.txt")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["m"], 5);
  EXPECT_EQ(j["W"], 9.0);
  EXPECT_EQ(j["scc_count"], 2);
  EXPECT_EQ(j["min_girth"], 2.0);
  EXPECT_EQ(j["max_girth"], 5.0);
}

TEST_F(CliTest, ThreadsDoNotChangeOutputBytes) {
  ASSERT_EQ(cli({"gen", "--model", "gnp-directed", "--n", "40", "--p", "0.15", "--wmax", "1000", "--seed", "11",
                 "--output", path("g.txt")})
                .code,
            0);
  for (const std::string algo : {"basic", "strong"}) {
    for (const std::string threads : {"1", "4"})
      ASSERT_EQ(cli({"build", "--input", path("g.txt"), "--k", "3", "--algo", algo, "--output",
                     path("s" + threads + ".txt"), "--threads", threads, "--stats", path("st" + threads + ".json")})
                    .code,
                0);
    EXPECT_EQ(slurp(path("s1.txt")), slurp(path("s4.txt")));
    auto a = nlohmann::json::parse(slurp(path("st1.json")));
    auto b = nlohmann::json::parse(slurp(path("st4.json")));
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    EXPECT_EQ(a, b);
  }
}

TEST_F(CliTest, GenIsDeterministic) {
  for (int i = 0; i < 2; ++i)
    ASSERT_EQ(cli({"gen", "--model", "grid-torus", "--n", "25", "--p", "0.5", "--wmax", "9", "--seed", "3", "--output",
                   path("g" + std::to_string(i) + ".txt")})
                  .code,
              0);
  EXPECT_EQ(slurp(path("g0.txt")), slurp(path("g1.txt")));
}

}  // namespace
}  // namespace rtspan
