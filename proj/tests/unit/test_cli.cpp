// Copyright 2026 The hepgrover Authors
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

#include "commands.hpp"

#include "hepgrover/qasm.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace hepgrover::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "hepgrover");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hepgrover_cli_" +
                std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string &name, const std::string &text) {
        std::ofstream(dir_ / name) << text;
        return dir_ / name;
    }

    fs::path dir_;
    const fs::path samples_ = fs::path(HEPGROVER_DATA_DIR) / "samples";
};

TEST(CliTokens, StateForms) {
    EXPECT_EQ(parse_state_token("5"), 5u);
    EXPECT_EQ(parse_state_token("0b101"), 5u);
    EXPECT_EQ(parse_state_token("|101>"), 5u);
    EXPECT_THROW((void)parse_state_token("5x"), std::exception);
    EXPECT_THROW((void)parse_state_token("|10"), std::exception);
}

TEST_F(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).code, 0);
    EXPECT_EQ(run({"search", "--help"}).code, 0);
}

TEST_F(Cli, UnknownFlagIsConfigError) {
    EXPECT_EQ(run({"search", "--bogus"}).code, kConfigError);
    EXPECT_EQ(run({}).code, kConfigError);
}

TEST_F(Cli, SearchWritesDeterministicReport) {
    const auto data = (samples_ / "five_groups.csv").string();
    const auto r1 = run({"search", "--data", data, "--scheme", "1", "--seed", "3",
                         "--out", (dir_ / "a.jsonl").string(), "--svg",
                         (dir_ / "svg").string(), "--emit-circuit",
                         (dir_ / "qasm").string()});
    ASSERT_EQ(r1.code, 0) << r1.err;
    const auto r2 = run({"search", "--data", data, "--scheme", "1", "--seed", "3",
                         "--out", (dir_ / "b.jsonl").string()});
    ASSERT_EQ(r2.code, 0);
    EXPECT_EQ(slurp(dir_ / "a.jsonl"), slurp(dir_ / "b.jsonl"));
    EXPECT_NE(r1.out.find("1 selection(s)"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir_ / "svg" / "group3_pass0.svg"));
    EXPECT_NO_THROW((void)load_circuit_text(dir_ / "qasm" / "group3_pass0.qasm"));
}

TEST_F(Cli, SearchErrorsMapToExitCodes) {
    const auto bad = write("bad.csv", "event_id,instance,lep_pt\n1,7,3\n");
    auto r = run({"search", "--data", bad.string()});
    EXPECT_EQ(r.code, kParseError);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);

    r = run({"search", "--data", (dir_ / "none.csv").string()});
    EXPECT_EQ(r.code, kConfigError);

    const auto data = (samples_ / "five_groups.csv").string();
    EXPECT_EQ(run({"search", "--data", data, "--scheme", "5"}).code, kConfigError);
    EXPECT_EQ(run({"search", "--data", data, "--threshold", "1.5"}).code, kConfigError);
    EXPECT_EQ(run({"search", "--data", data, "--noise", "nowhere"}).code, kConfigError);
    const auto prof = write("p.profile", "p1 = 0.1\nwhat = 2\n");
    EXPECT_EQ(run({"search", "--data", data, "--noise", prof.string()}).code,
              kParseError);
}

TEST_F(Cli, SearchWithNoiseProfile) {
    const auto data = (samples_ / "mixed_eight.csv").string();
    const auto r = run({"search", "--data", data, "--noise", "vigo-like",
                        "--shots", "2048"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("vigo-like"), std::string::npos);
}

TEST_F(Cli, DemoAndSweep) {
    auto r = run({"demo-grover", "-n", "3", "--marked", "|101>", "--shots", "512"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("iterations 2 (optimal)"), std::string::npos);
    EXPECT_NE(r.out.find("analytic 0.945312"), std::string::npos);

    r = run({"demo-grover", "-n", "3", "--marked", "5", "--sweep", "0..3",
             "--shots", "256", "--out", (dir_ / "curve.csv").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(slurp(dir_ / "curve.csv"), r.out);
    EXPECT_NE(r.out.find("1,0.781250,0.781250"), std::string::npos);

    EXPECT_EQ(run({"demo-grover", "-n", "3", "--marked", "9"}).code, kConfigError);
    EXPECT_EQ(run({"demo-grover", "-n", "30"}).code, kConfigError);
    EXPECT_EQ(run({"demo-grover", "--sweep", "3..1", "--marked", "1"}).code,
              kConfigError);
}

TEST_F(Cli, EmitAndNoiseSimRoundTrip) {
    const auto qasm = dir_ / "g.qasm";
    auto r = run({"emit-circuit", "--out", qasm.string(), "-n", "3", "--marked",
                  "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    r = run({"noise-sim", "--circuit", qasm.string(), "--marked", "6", "--noise",
             "ideal", "--shots", "1000", "--out", (dir_ / "n.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("noiseless 0.9453"), std::string::npos);
    EXPECT_TRUE(fs::exists(dir_ / "n.json"));

    r = run({"emit-circuit", "--out", (dir_ / "d.qasm").string(), "--data",
             (samples_ / "mixed_eight.csv").string(), "--group", "1", "--pass", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(run({"emit-circuit", "--out", (dir_ / "d.qasm").string(), "--data",
                   (samples_ / "mixed_eight.csv").string(), "--group", "9"})
                  .code,
              kConfigError);

    const auto broken = write("broken.qasm", "OPENQASM 2.0;\nqreg q[1];\nfoo q[0];\n");
    EXPECT_EQ(run({"noise-sim", "--circuit", broken.string()}).code, kParseError);
    EXPECT_EQ(run({"noise-sim"}).code, kConfigError);
}

TEST_F(Cli, NoiseSimFromDataset) {
    const auto r = run({"noise-sim", "--data", (samples_ / "mixed_eight.csv").string(),
                        "--group", "0", "--noise", "melbourne-like", "--shots", "2048"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("marked fraction"), std::string::npos);
}

} // namespace
} // namespace hepgrover::cli
