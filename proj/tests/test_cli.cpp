// Copyright 2026 The Broadcast Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "broadcast/broadcast.hpp"
#include "broadcast/io.hpp"

namespace {

using broadcast::io::json;

struct Result {
  int code = -1;
  std::string out;
};

/// Runs the CLI through the shell; stderr is folded into the output.
Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + BROADCAST_CLI + std::string(" ") + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string example_csv() { return std::string(BROADCAST_SOURCE_DIR) + "/data/example1.csv"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<std::string> row_starting(const std::string& text, const std::string& first) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto w = words(line);
    if (!w.empty() && w[0] == first) return w;
  }
  return {};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, ExampleMatchesGoldenFile) {
  const Result r = cli("example");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read_file(std::string(BROADCAST_SOURCE_DIR) + "/tests/golden/example1.txt"));
}

TEST(Cli, AllocateConcedeAndDivide) {
  const Result r = cli("allocate --rule cd --input " + example_csv());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(row_starting(r.out, "CD"), (std::vector<std::string>{"CD", "3260", "640", "60"}));
}

TEST(Cli, AllocateJsonCarriesExactValues) {
  const Result r = cli("allocate --rule uc:1/3 --rule ext-ec:0.9,0.6 --format json --decimals 1 --input " +
                    example_csv());
  ASSERT_EQ(r.code, 0) << r.out;
  const json j = json::parse(r.out);
  const auto a = broadcast::io::problem_from_json(j["problem"]);
  const auto uc = broadcast::io::allocation_from_json(j["allocations"][0]["shares"]);
  EXPECT_EQ(uc, broadcast::parse_rule("uc:1/3")(a));
  EXPECT_EQ(j["allocations"][0]["shares"][0], "7840/3");
  EXPECT_EQ(j["allocations"][1]["rule"], "ext-ec:9/10,3/5");
}

TEST(Cli, DecimalsOnlyAffectDisplay) {
  const Result r = cli("allocate --rule uc:1/3 --format csv --decimals 2 --input " + example_csv());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("2613.33,866.67,480.00"), std::string::npos) << r.out;
  const Result exact = cli("allocate --rule uc:1/3 --format csv --input " + example_csv());
  EXPECT_NE(exact.out.find("7840/3"), std::string::npos) << exact.out;
}

TEST(Cli, FalsifyReportsWitnessWithExitTwo) {
  const Result r = cli("falsify --rule counter:R1 --axiom AN --seed 7 --trials 10000");
  EXPECT_EQ(r.code, 2);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["outcome"], "witness");
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j.contains("witness"));
}

TEST(Cli, SameSeedSameBytes) {
  const std::string args = "falsify --rule counter:R7 --axiom HOP --trials 500 --threads 3";
  const Result a = cli(args + " --seed 42");
  const Result b = cli(args + " --seed 42");
  const Result env = cli(args, "BROADCAST_SEED=42");
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, env.out);
  const Result audit1 = cli("audit --rule counter:R12 --axioms AN,AD,HOP --trials 300 --seed 9");
  const Result audit2 = cli("audit --rule counter:R12 --axioms AN,AD,HOP --trials 300 --seed 9 --threads 1");
  EXPECT_EQ(audit1.code, 0);
  EXPECT_EQ(audit1.out, audit2.out);
}

TEST(Cli, FalsifyExhaustedExitsZero) {
  const Result r = cli("falsify --rule cd --axiom AN --trials 200");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["outcome"], "no witness");
}

TEST(Cli, ClassifyListsConcedeAndDivide) {
  const Result r = cli("classify --x 1 --y 1 --teams 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("concede-and-divide"), std::string::npos) << r.out;
}

TEST(Cli, DecomposeExitCodes) {
  EXPECT_EQ(cli("decompose --rule cd --teams 3").code, 0);
  EXPECT_EQ(cli("decompose --rule counter:R1 --teams 3").code, 3);
  const json j = json::parse(cli("decompose --rule ext-ue:1/2,1/5 --teams 4 --format json").out);
  EXPECT_EQ(j["z"], "3/20");
}

TEST(Cli, CompareExitCodes) {
  EXPECT_EQ(cli("compare --rule cd --rule equal-split").code, 2);
  EXPECT_EQ(cli("compare --rule uc:1/2 --rule ec:2/3 --n-max 3 --trials 100").code, 0);
}

TEST(Cli, InputErrorsExitOne) {
  const Result bad_rule = cli("allocate --rule bogus --input " + example_csv());
  EXPECT_EQ(bad_rule.code, 1);
  EXPECT_NE(bad_rule.out.find("UnknownRule"), std::string::npos);

  const Result diag = cli("allocate --rule cd --input " + temp_file("broadcast_diag.csv", "0,1,1\n1,4,1\n1,1,0\n"));
  EXPECT_EQ(diag.code, 1);
  EXPECT_NE(diag.out.find("NonzeroDiagonal"), std::string::npos) << diag.out;
  EXPECT_NE(diag.out.find("(2,2)"), std::string::npos) << diag.out;

  const Result range = cli("allocate --rule ext-ec:0.3,0.4 --input " + example_csv());
  EXPECT_EQ(range.code, 1);
  EXPECT_NE(range.out.find("ParamOutOfRange"), std::string::npos);

  EXPECT_EQ(cli("allocate --input " + example_csv()).code, 1);
  EXPECT_EQ(cli("frobnicate").code, 1);
}

TEST(Cli, JsonInputFile) {
  const std::string path = temp_file(
      "broadcast_in.json", R"({"teams": ["A", "B", "C"], "audience": [[0,1200,1030],[750,0,140],[630,210,0]]})");
  const Result r = cli("allocate --rule equal-split --input " + path);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(row_starting(r.out, "ES"), (std::vector<std::string>{"ES", "1805", "1150", "1005"}));
}

}  // namespace
