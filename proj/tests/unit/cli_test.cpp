#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;
using mlcn::cli::ExitCode;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = mlcn::cli::main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

nlohmann::json load(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mlcn_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"run", "--mode", "xebc"}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"run", "--format", "xml"}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"run", "--nodes", "abc"}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"calibrate", "--samples", "0"}).code, ExitCode::kUsage);

  const Result snbc = invoke({"run", "--mode", "snbc", "--nodes", "10", "--failures", "10",
                              "--out", (dir_ / "x.csv").string()});
  EXPECT_EQ(snbc.code, ExitCode::kUsage);
  EXPECT_NE(snbc.err.find("failures"), std::string::npos) << snbc.err;
  EXPECT_FALSE(fs::exists(dir_ / "x.csv"));

  EXPECT_EQ(invoke({"run", "--replicates", "0"}).code, ExitCode::kUsage);
  EXPECT_EQ(invoke({"run", "--l1-p", "0"}).code, ExitCode::kUsage);
}

TEST_F(CliTest, HelpSucceeds) {
  const Result help = invoke({"--help"});
  EXPECT_EQ(help.code, ExitCode::kOk);
  EXPECT_NE(help.out.find("run"), std::string::npos);
}

TEST_F(CliTest, RunWritesCsvAndSummary) {
  const fs::path out = dir_ / "debc.csv";
  const Result r = invoke({"run", "--mode", "debc", "--failures", "25", "--seed", "5", "--out",
                           out.string()});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
  EXPECT_NE(r.out.find("25"), std::string::npos) << r.out;
  const std::string text = slurp(out);
  EXPECT_EQ(text.rfind("mode,replicate,step,layer,", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 25 * 3);
}

TEST_F(CliTest, DeterministicAcrossRepeatsAndThreads) {
  for (const char* format : {"csv", "json"}) {
    std::vector<std::string> outputs;
    for (const char* threads : {"1", "1", "3"}) {
      const fs::path out = dir_ / (std::string("out_") + threads + "." + format);
      const Result r = invoke({"run", "--mode", "dnbc", "--failures", "12", "--replicates", "3",
                               "--threads", threads, "--format", format, "--seed", "17", "--out",
                               out.string()});
      ASSERT_EQ(r.code, ExitCode::kOk) << r.err;
      outputs.push_back(slurp(out));
    }
    EXPECT_EQ(outputs[0], outputs[1]) << format;
    EXPECT_EQ(outputs[0], outputs[2]) << format;
  }
}

TEST_F(CliTest, GenerationFailureHasItsOwnCode) {
  const Result r = invoke({"run", "--nodes", "100", "--l1-p", "0.001", "--l2-p", "0.01",
                           "--l3-m", "3", "--gauss-attempts", "1", "--out",
                           (dir_ / "g.csv").string()});
  EXPECT_EQ(r.code, ExitCode::kGeneration) << r.err;
}

TEST_F(CliTest, UnwritableOutputIsIoError) {
  const Result r = invoke({"run", "--failures", "2", "--out", "/nonexistent-mlcn-dir/o.csv"});
  EXPECT_EQ(r.code, ExitCode::kIo);
  EXPECT_NE(r.err.find("/nonexistent-mlcn-dir/o.csv"), std::string::npos) << r.err;
}

TEST_F(CliTest, FixtureSidecarsHoldBruteForceValues) {
  const Result r = invoke({"fixtures", "--out", dir_.string()});
  ASSERT_EQ(r.code, ExitCode::kOk) << r.err;

  EXPECT_EQ(slurp(dir_ / "p3.edges"), "0 1\n1 2\n");
  const auto p3 = load(dir_ / "p3.json");
  EXPECT_DOUBLE_EQ(p3["aspl"].get<double>(), 4.0 / 3.0);
  EXPECT_EQ(p3["tspc"], 3);

  const auto p4 = load(dir_ / "p4.json");
  EXPECT_EQ(p4["max_ebc_edges"], nlohmann::json::parse("[[1, 2]]"));

  const auto c4 = load(dir_ / "c4.json");
  for (double v : c4["node_betweenness"].get<std::vector<double>>()) EXPECT_DOUBLE_EQ(v, 0.5);
  EXPECT_EQ(c4["tspc"], 8);

  const auto split = load(dir_ / "two_components.json");
  EXPECT_DOUBLE_EQ(split["aspl"].get<double>(), 1.0);

  const auto chain = load(dir_ / "chain.json");
  EXPECT_TRUE(chain.contains("before"));
  EXPECT_TRUE(chain.contains("after"));
  EXPECT_TRUE(fs::exists(dir_ / "chain_l3.edges"));
}

TEST_F(CliTest, CalibrateReportsAndChecksOrdering) {
  const fs::path out = dir_ / "cal.json";
  const Result ok = invoke({"calibrate", "--samples", "20", "--seed", "3", "--out", out.string()});
  ASSERT_EQ(ok.code, ExitCode::kOk) << ok.err;
  const auto report = load(out);
  EXPECT_EQ(report["samples"], 20);
  EXPECT_TRUE(report["ordering_ok"].get<bool>());
  EXPECT_GT(report["mean_tne"]["L3"].get<double>(), report["mean_tne"]["L2"].get<double>());

  const Result bad = invoke({"calibrate", "--samples", "20", "--l2-p", "0.03"});
  EXPECT_EQ(bad.code, ExitCode::kCheckFailed);
  EXPECT_NE(bad.out.find("FAILED"), std::string::npos) << bad.out;
}

}  // namespace
