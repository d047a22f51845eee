// Copyright 2026 The mctsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mctsynth/circuit_io.hpp"
#include "mctsynth/cli.hpp"

using namespace mctsynth;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mctsynth_cli_" + std::to_string(::testing::UnitTest::GetInstance()
                                                 ->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  std::string read(const std::string& name) const {
    std::ifstream in(path(name));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, SynthLadderPeres) {
  const auto r = run({"synth", "--size", "6", "--garbage", "3", "--strategy",
                      "lemma72-peres", "--expand"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cost=48 garbage=3 lines=9 strategy=lemma72-peres\n");
}

TEST_F(CliTest, SynthAutoWritesFile) {
  const auto r = run({"synth", "--size", "9", "--garbage", "1", "--out", path("c.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cost=154 garbage=1 lines=10 strategy=split:4+5\n");
  const Circuit c = parse_circuit(read("c.txt"));
  EXPECT_EQ(c.width(), 10u);
}

TEST_F(CliTest, SynthStrategyNeedsGarbage) {
  const auto r = run({"synth", "--size", "6", "--garbage", "1", "--strategy", "lemma72"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("--garbage >= 3"), std::string::npos);
  EXPECT_EQ(run({"synth", "--size", "6", "--strategy", "cor74"}).code, 1);
  EXPECT_EQ(run({"synth", "--size", "5", "--garbage", "1", "--strategy", "cor74"}).code, 1);
}

TEST_F(CliTest, SynthOutputVerifiesWithDeclaredRoles) {
  for (const std::vector<std::string>& extra :
       {std::vector<std::string>{"--strategy", "lemma71"},
        {"--strategy", "lemma72", "--garbage", "3"},
        {"--strategy", "lemma72-peres", "--garbage", "3", "--expand"},
        {"--strategy", "cor74", "--garbage", "1"},
        {"--strategy", "cor74-peres", "--garbage", "1", "--expand"},
        {"--garbage", "1", "--expand"}}) {
    std::vector<std::string> args{"synth", "--size", "6", "--out", path("s.txt")};
    args.insert(args.end(), extra.begin(), extra.end());
    ASSERT_EQ(run(args).code, 0);
    const auto v = run({"verify", path("s.txt")});
    EXPECT_EQ(v.code, 0) << v.out << v.err;
  }
}

TEST_F(CliTest, VerifyExpandedSizeFive) {
  ASSERT_EQ(run({"synth", "--size", "5", "--expand", "--out", path("c.txt")}).code, 0);
  const auto r = run({"verify", path("c.txt"), "--controls", "0,1,2,3", "--target", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("verdict=exact_unitary ", 0), 0u) << r.out;
  EXPECT_NE(r.out.find("non_restored=- basis_preserving=true"), std::string::npos);
}

TEST_F(CliTest, VerifyFailureExitsTwo) {
  write("bad.txt", ".lines 3\ncx 0 2\n.end\n");
  const auto r = run({"verify", path("bad.txt"), "--controls", "0,1", "--target", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("verdict=fail", 0), 0u);
}

TEST_F(CliTest, VerifyReportsGarbage) {
  write("g.txt", ".lines 4\nccx 0 1 2\ncx 0 3\n.end\n");
  const auto r = run({"verify", path("g.txt"), "--controls", "0,1", "--target", "2",
                      "--extra", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("verdict=mainline_ok_with_garbage", 0), 0u);
  EXPECT_NE(r.out.find("non_restored=3 "), std::string::npos);
}

TEST_F(CliTest, VerifyNeedsRolesOrFlags) {
  write("c.txt", ".lines 3\nccx 0 1 2\n.end\n");
  EXPECT_EQ(run({"verify", path("c.txt")}).code, 1);
  EXPECT_EQ(run({"verify", path("missing.txt"), "--controls", "0", "--target", "1"}).code, 1);
}

TEST_F(CliTest, OptimizeCancelsPairs) {
  write("in.txt", ".lines 4\ncx 0 1\nccx 2 3 1\ncx 0 1\n.end\n");
  const auto r = run({"optimize", path("in.txt"), "--out", path("out.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gates 3 -> 1\n");
  EXPECT_EQ(read("out.txt"), ".lines 4\nccx 2 3 1\n.end\n");
}

TEST_F(CliTest, ExpandMacros) {
  write("in.txt", ".lines 3\n.roles c c t\nperes 0 1 2\n.end\n");
  const auto r = run({"expand", path("in.txt"), "--out", path("out.txt")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "gates 1 -> 4 cost=4\n");
  EXPECT_EQ(read("out.txt"),
            ".lines 3\n.roles c c t\ncv 1 2\ncx 0 1\ncv+ 1 2\ncv 0 2\n.end\n");
}

TEST_F(CliTest, ParseErrorIsUsageError) {
  write("bad.txt", ".lines 2\nfoo 0 1\n.end\n");
  const auto r = run({"expand", path("bad.txt"), "--out", path("o.txt")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, CostTableCsv) {
  const auto r = run({"cost-table", "--max-size", "10", "--csv"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "size,garbage,cost,strategy");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 20);
  EXPECT_NE(r.out.find("\n10,1,192,"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"synth"}).code, 1);
  EXPECT_EQ(run({"synth", "--size", "4", "--strategy", "magic"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
