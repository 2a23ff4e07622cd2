#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ftspanner");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ftspanner::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("ftspanner_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, GenBuildVerify) {
  ASSERT_EQ(run({"gen", "--n", "120", "--seed", "4", "--out", path("p.txt")}).code, 0);
  const Result b = run({"build", "--points", path("p.txt"), "--k", "1", "--out", path("s.txt"), "--report", path("r.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  const auto report = nlohmann::json::parse(std::ifstream(path("r.json")));
  EXPECT_EQ(report["params"]["k"], 1);
  EXPECT_GT(report["edge_count"].get<int>(), 0);
  for (const char* mode : {"stretch", "hops", "degree", "lightness", "ft", "net-counts"}) {
    const Result v = run({"verify", "--points", path("p.txt"), "--spanner", path("s.txt"), "--mode", mode, "--trials", "5"});
    EXPECT_EQ(v.code, 0) << mode << "\n" << v.out << v.err;
    EXPECT_EQ(nlohmann::json::parse(v.out)["mode"], mode);
  }
}

TEST_F(Cli, CorruptedWeightFailsVerification) {
  ASSERT_EQ(run({"gen", "--n", "60", "--out", path("p.txt")}).code, 0);
  ASSERT_EQ(run({"build", "--points", path("p.txt"), "--out", path("s.txt")}).code, 0);
  std::ifstream in(path("s.txt"));
  std::ofstream bad(path("bad.txt"));
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    if (row++ == 1) {
      std::istringstream fields(line);
      std::string u, v, w, a, b;
      fields >> u >> v >> w >> a >> b;
      line = u + " " + v + " " + std::to_string(std::stod(w) * 0.5) + " " + a + " " + b;
    }
    bad << line << '\n';
  }
  bad.close();
  const Result v = run({"verify", "--points", path("p.txt"), "--spanner", path("bad.txt"), "--mode", "degree"});
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(nlohmann::json::parse(v.out)["checks"]["weights match metric"], false);
}

TEST_F(Cli, UsageErrors) {
  ASSERT_EQ(run({"gen", "--n", "20", "--out", path("p.txt")}).code, 0);
  EXPECT_EQ(run({"build", "--points", path("p.txt"), "--k", "-1"}).code, 2);
  EXPECT_EQ(run({"build", "--points", path("p.txt"), "--k", "19"}).code, 2);
  EXPECT_EQ(run({"build", "--points", path("missing.txt")}).code, 2);
  EXPECT_EQ(run({"build", "--points", path("p.txt"), "--epsilon", "0"}).code, 2);
  EXPECT_EQ(run({"verify", "--points", path("p.txt"), "--spanner", path("p.txt")}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "5", "--dist", "sphere"}).code, 2);
  EXPECT_EQ(run({"experiment", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, LineAndFileInputs) {
  const Result line = run({"gen", "--n", "4", "--dist", "line", "--eta", "0.5"});
  ASSERT_EQ(line.code, 0);
  EXPECT_NE(line.out.find("1.5"), std::string::npos);
  std::ofstream(path("in.txt")) << line.out;
  ASSERT_EQ(run({"gen", "--dist", "file", "--in", path("in.txt"), "--out", path("copy.txt")}).code, 0);
  std::stringstream copy;
  copy << std::ifstream(path("copy.txt")).rdbuf();
  EXPECT_EQ(copy.str(), line.out);
}

TEST_F(Cli, ExperimentWritesCsv) {
  const Result e = run({"experiment", "--suite", "net-counts", "--sizes", "128,256", "--seeds", "1,2", "--out-dir", path("out")});
  EXPECT_NE(e.code, 2) << e.err;
  std::ifstream csv(path("out/net-counts.csv"));
  std::string header;
  std::getline(csv, header);
  EXPECT_EQ(header, "n,dim,seed,level,n_i,r_i,n_i_r_i2,constants_version");
  EXPECT_NE(e.out.find("top net is a single point"), std::string::npos);
}
