#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dodo/cli.hpp"

namespace dodo::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dodo_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  std::string nine_day() {
    return file("nine_day.json", R"({"days": 9, "workers": 4, "bounds": {"uw": 4, "uo": 2, "Uw": 6, "Uo": 4},
      "requests": [[1,3],[1,1],[1,4],[2,3],[4,4],[1,3],[2,4],[2,2],[1,2]]})");
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(Cli, SolveNineDayThenCheck) {
  const auto in = nine_day();
  ASSERT_EQ(run({"solve", in, "-o", path("s.json")}), kFeasible) << err_.str();
  EXPECT_NE(err_.str().find("UDODOSP_POLY"), std::string::npos);
  std::ifstream s(path("s.json"));
  EXPECT_TRUE(nlohmann::json::parse(s).contains("compact"));
  EXPECT_EQ(run({"check", in, path("s.json")}), kFeasible);
  EXPECT_EQ(out_.str(), "FEASIBLE\n");
}

TEST_F(Cli, NothingRequestedIsAllOff) {
  const auto in = file("zero.json", R"({"days": 4, "workers": 2, "bounds": {"lw": 2, "Uw": 3}, "requests": [0, 0, 0, 0]})");
  ASSERT_EQ(run({"solve", in, "--format", "dense"}), kFeasible);
  const auto doc = nlohmann::json::parse(out_.str());
  EXPECT_EQ(doc["rows"], nlohmann::json({"0000", "0000"}));
}

TEST_F(Cli, InfeasibleSolvePrintsTheCycle) {
  const auto in = file("uw1.json", R"({"days": 2, "workers": 1, "bounds": {"uw": 1}, "requests": [1, 1]})");
  EXPECT_EQ(run({"solve", in}), kInfeasible);
  EXPECT_NE(out_.str().find("work window (uw)"), std::string::npos) << out_.str();
}

TEST_F(Cli, CheckListsViolations) {
  const auto in = file("i.json", R"({"days": 3, "workers": 1, "bounds": {"uw": 2}, "requests": [1, 1, 1]})");
  const auto s = file("s.json", R"({"days": 3, "workers": 1, "rows": ["111"]})");
  EXPECT_EQ(run({"check", in, s}), kInfeasible);
  EXPECT_NE(out_.str().find("1 violation"), std::string::npos) << out_.str();
}

TEST_F(Cli, TamperedCertificateIsRejected) {
  const auto in = nine_day();
  ASSERT_EQ(run({"certify", in, "-o", path("c.txt")}), kFeasible) << err_.str();
  ASSERT_EQ(run({"verify", in, path("c.txt")}), kFeasible);
  EXPECT_EQ(out_.str(), "VALID\n");

  // Drop one unit on the s-edge: conservation and value break at day 1.
  std::ifstream read(path("c.txt"));
  std::ostringstream tampered;
  bool moved = false;
  for (std::string line; std::getline(read, line);) {
    std::istringstream tok(line);
    std::string tail, head;
    long long amount = 0;
    tok >> tail >> head >> amount;
    if (!moved && tail == "s" && amount > 1) {
      tampered << tail << ' ' << head << ' ' << amount - 1 << '\n';
      moved = true;
    } else {
      tampered << line << '\n';
    }
  }
  ASSERT_TRUE(moved);
  file("bad.txt", tampered.str());
  EXPECT_EQ(run({"verify", in, path("bad.txt")}), kInfeasible);
  EXPECT_NE(out_.str().find("REJECTED"), std::string::npos);
  EXPECT_NE(out_.str().find("(1,"), std::string::npos) << out_.str();
}

TEST_F(Cli, OverstaffedCertificateNamesTheDay) {
  // Conserved flow of value N, but both workers on duty every day.
  const auto in = file("i.json", R"({"days": 3, "workers": 2, "requests": [1, 2, 1]})");
  const auto s = file("s.json", R"({"days": 3, "workers": 2, "rows": ["111", "111"]})");
  ASSERT_EQ(run({"certify", in, s, "-o", path("c.txt")}), kFeasible) << err_.str();
  EXPECT_EQ(run({"verify", in, path("c.txt")}), kInfeasible);
  EXPECT_NE(out_.str().find("day 1: 2 on duty, request [1, 1]"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("day 3"), std::string::npos);
}

TEST_F(Cli, GenerateValidateAndGate) {
  const auto tp = file("tp.json", R"({"m": 2, "A": [3, 3, 3, 4, 4, 5]})");
  ASSERT_EQ(run({"generate", "--from-3partition", tp, "-o", path("hard.json")}), kFeasible);
  EXPECT_EQ(run({"validate", path("hard.json")}), kFeasible);
  EXPECT_NE(out_.str().find("GENERAL_HARD"), std::string::npos);
  EXPECT_EQ(run({"solve", path("hard.json")}), kUndecided);
  EXPECT_EQ(run({"brute", path("hard.json")}), kUndecided);
  EXPECT_EQ(run({"solve", path("hard.json"), "--limit", "56"}), kFeasible);
  EXPECT_EQ(run({"generate", "--from-3partition", tp, "--variant", "ONESIDED_UW_UO_LO"}), kFeasible);
  EXPECT_EQ(run({"generate", "--from-3partition", tp, "--variant", "NOPE"}), kInputError);
}

TEST_F(Cli, Optimizers) {
  const auto in = file("w.json", R"({"days": 5, "workers": 2, "requests": [1, 2, 1, 2, 1]})");
  ASSERT_EQ(run({"optimize-bound", in, "--target", "uw"}), kFeasible);
  EXPECT_EQ(out_.str(), "minimal uw = 3\n");
  const auto fixed = file("p.json", R"({"days": 3, "workers": 9, "requests": [2, 2, 2]})");
  ASSERT_EQ(run({"optimize-workers", fixed}), kFeasible);
  EXPECT_EQ(out_.str(), "minimal N = 2\n");
}

TEST_F(Cli, BruteEnumerates) {
  const auto in = file("b.json", R"({"days": 2, "workers": 2, "requests": [1, 1]})");
  ASSERT_EQ(run({"brute", in, "--all"}), kFeasible);
  EXPECT_EQ(nlohmann::json::parse(out_.str()).size(), 4u);
}

TEST_F(Cli, InputErrors) {
  EXPECT_EQ(run({"solve", path("absent.json")}), kInputError);
  EXPECT_EQ(run({"solve", file("bad.json", "{ not json")}), kInputError);
  EXPECT_EQ(run({"solve", file("neg.json", R"({"days": 2, "workers": 1, "requests": [2, 0]})")}), kInputError);
  EXPECT_EQ(run({"frobnicate"}), kInputError);
  EXPECT_EQ(run({}), kInputError);
  EXPECT_EQ(run({"--help"}), kFeasible);
}

}  // namespace
}  // namespace dodo::cli
