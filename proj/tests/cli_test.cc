// Copyright 2026 The groupcert Authors
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

// Runs the groupcert binary and checks exit codes and JSON output.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "groupcert/catalog.h"
#include "groupcert/json_io.h"
#include "groupcert/replay.h"

namespace groupcert {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("groupcert_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  static std::string Fixture(const std::string& name) {
    return std::string(GROUPCERT_FIXTURES) + "/" + name;
  }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Exit status of `groupcert args`, with stdout captured to out_.
  int Run(const std::string& args) {
    const std::string out = Path("stdout.txt");
    const std::string cmd = std::string(GROUPCERT_CLI) + " " + args + " > " +
                            out + " 2> " + Path("stderr.txt");
    const int status = std::system(cmd.c_str());
    out_ = Slurp(out);
    err_ = Slurp(Path("stderr.txt"));
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string Slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void Write(const std::string& name, const std::string& text) const {
    std::ofstream(Path(name), std::ios::binary) << text;
  }

  fs::path dir_;
  std::string out_;
  std::string err_;
};

TEST_F(CliTest, Validate) {
  EXPECT_EQ(Run("validate " + Fixture("gmi_2_5.json")), 0);
  Write("overlap.json",
        R"({"k":1,"f":["1/2"],"cells":[)"
        R"({"vertices":[["0"],["1/2"]],"gradient":["0"],"offset":"0"},)"
        R"({"vertices":[["1/4"],["1"]],"gradient":["0"],"offset":"0"}]})");
  EXPECT_EQ(Run("validate " + Path("overlap.json") + " --json"), 2);
  EXPECT_NE(err_.find("gap-or-overlap"), std::string::npos);
  const Json report = Json::parse(out_);
  EXPECT_EQ(report["valid"], false);
  EXPECT_FALSE(report["witness"].is_null());
  Write("truncated.json", R"({"k":1,"f":["1/2"],"cells":[)");
  EXPECT_EQ(Run("validate " + Path("truncated.json")), 64);
  EXPECT_EQ(Run("validate " + Path("missing.json")), 64);
}

TEST_F(CliTest, CertifyWritesReplayableReport) {
  const std::string input = Fixture("gmi_2_5.json");
  EXPECT_EQ(Run("certify " + input + " --json=" + Path("report.json")), 0);
  const Json report = Json::parse(Slurp(Path("report.json")));
  EXPECT_EQ(report["format"], 1);
  EXPECT_EQ(report["input_sha256"], Sha256Hex(Slurp(input)));
  EXPECT_EQ(report["certificate"]["system"]["solution"],
            Json::parse(R"([["5/3"],["-5/2"]])"));
  EXPECT_TRUE(VerifyCertificate(report["certificate"]).accepted);
}

TEST_F(CliTest, CertifyNegativeStages) {
  EXPECT_EQ(Run("certify " + Fixture("diagonal_lift.json") + " --json"), 1);
  EXPECT_EQ(Json::parse(out_)["certificate"]["failed_stage"],
            "genuine-dimensionality");
  EXPECT_EQ(Run("certify " + Fixture("spike.json") + " --json"), 1);
  EXPECT_EQ(Json::parse(out_)["certificate"]["failed_stage"], "minimality");
}

TEST_F(CliTest, Oracle) {
  EXPECT_EQ(Run("oracle " + Fixture("gmi_2_5.json") + " --q 5"), 0);
  EXPECT_EQ(Run("oracle " + Fixture("gmi_2_5.json") + " --q 7"), 65);
  EXPECT_EQ(
      Run("oracle " + Fixture("non_extreme_three_slope.json") + " --q 12 --json"),
      1);
  const Json report = Json::parse(out_);
  EXPECT_EQ(report["oracle"]["verdict"], "degenerate");
  EXPECT_TRUE(report["oracle"]["perturbation"]["both_minimal"].get<bool>());
}

TEST_F(CliTest, PlotData) {
  EXPECT_EQ(Run("plot-data " + Fixture("gmi_2_5.json")), 0);
  const Json plot = Json::parse(out_);
  EXPECT_EQ(plot["cells"].size(), 2u);
  Write("zero3.json", SerializeFunction(catalog::ConstantZero(3)));
  EXPECT_EQ(Run("plot-data " + Path("zero3.json")), 66);
}

TEST_F(CliTest, GenMatchesFixtures) {
  EXPECT_EQ(Run("gen gmi --f 2/5"), 0);
  EXPECT_EQ(out_, Slurp(Fixture("gmi_2_5.json")));
  EXPECT_EQ(Run("gen spike"), 0);
  EXPECT_EQ(out_, Slurp(Fixture("spike.json")));
  EXPECT_EQ(Run("gen triangle-lifting"), 0);
  EXPECT_EQ(out_, Slurp(Fixture("triangle_lifting.json")));
  EXPECT_EQ(Run("gen gmi --f 0"), 64);
  EXPECT_EQ(Run("gen no-such-fixture"), 64);
}

TEST_F(CliTest, RoundTrip) {
  ASSERT_EQ(Run("gen random --k 2 --q 3 --seed 4 -o " + Path("r.json")), 0);
  EXPECT_EQ(Run("validate " + Path("r.json")), 0);
  const int code = Run("certify " + Path("r.json") + " --json");
  EXPECT_TRUE(code == 0 || code == 1);
  const Json report = Json::parse(out_);
  EXPECT_EQ(report["input_sha256"], Sha256Hex(Slurp(Path("r.json"))));
}

}  // namespace
}  // namespace groupcert
