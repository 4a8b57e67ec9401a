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

#include <sstream>
#include <string>

#include "broadcast/broadcast.hpp"
#include "broadcast/io.hpp"
#include "oracle.hpp"

namespace {

using namespace broadcast;
using broadcast::io::json;

std::string message_of(const std::function<void()>& f, Errc expected) {
  try {
    f();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return "";
}

TEST(Csv, ReadsRationalAndDecimalTokens) {
  const Problem a = io::read_csv_string("# audience\n0, 1/2, 0.25\n\n3,0,0\r\n0,0,0.0\n");
  EXPECT_EQ(a(1, 2), Rational(1, 2));
  EXPECT_EQ(a(1, 3), Rational(1, 4));
  EXPECT_EQ(a(2, 1), 3);
}

TEST(Csv, DiagonalTokensMustBeZero) {
  EXPECT_NO_THROW(io::read_csv_string("0/7,1,1\n1,0.000,1\n1,1,-0\n"));
  const std::string m = message_of([] { io::read_csv_string("0,1,1\n1,1/2,1\n1,1,0\n"); }, Errc::NonzeroDiagonal);
  EXPECT_NE(m.find("(2,2)"), std::string::npos);
}

TEST(Csv, ErrorsNameLineAndColumn) {
  const std::string m = message_of([] { io::read_csv_string("0,1,1\n\n1,0,x\n1,1,0\n"); }, Errc::ParseError);
  EXPECT_NE(m.find("line 3, column 3"), std::string::npos) << m;
  message_of([] { io::read_csv_string("0,1\n1,0,1\n"); }, Errc::NonSquare);
  message_of([] { io::read_csv_string("0,1,-1\n1,0,1\n1,1,0\n"); }, Errc::NegativeEntry);
}

TEST(Csv, WriteThenReadIsIdentity) {
  const Problem a = Problem::validate({{0, Rational(7, 3), 0}, {1, 0, Rational(1, 9)}, {2, 5, 0}});
  std::ostringstream out;
  io::write_csv(out, a);
  EXPECT_EQ(out.str(), "0,7/3,0\n1,0,1/9\n2,5,0\n");
  EXPECT_EQ(io::read_csv_string(out.str()), a);
}

TEST(Csv, ShippedExampleMatrix) {
  EXPECT_EQ(io::read_problem_file(BROADCAST_SOURCE_DIR "/data/example1.csv"), oracle::example1());
  message_of([] { io::read_problem_file("/nonexistent/file.csv"); }, Errc::ParseError);
}

TEST(Json, ProblemRoundTrip) {
  const Problem a = Problem::validate({{0, Rational(1, 3), 4}, {Rational(5, 2), 0, 0}, {1, 1, 0}},
                                      {"North", "South", "East"});
  const json j = io::to_json(a);
  EXPECT_EQ(j["audience"][0][1], "1/3");
  EXPECT_EQ(j["teams"][2], "East");
  const Problem b = io::problem_from_json(json::parse(j.dump()));
  EXPECT_EQ(b, a);
  EXPECT_EQ(b.labels(), a.labels());
}

TEST(Json, AcceptsNumbersAndStrings) {
  const Problem a = io::problem_from_json(json::parse(R"({"audience": [[0, 1.5, "2/3"], [4, 0, 0.1], [0, 0, 0]]})"));
  EXPECT_EQ(a(1, 2), Rational(3, 2));
  EXPECT_EQ(a(1, 3), Rational(2, 3));
  EXPECT_EQ(a(2, 3), Rational(1, 10));
  message_of([] { io::problem_from_json(json::parse(R"({"rows": []})")); }, Errc::ParseError);
  message_of([] { io::problem_from_json(json::parse(R"({"audience": [[0, true, 1], [1, 0, 1], [1, 1, 0]]})")); },
             Errc::ParseError);
  message_of([] { io::problem_from_json(json::parse(R"({"teams": ["a"], "audience": [[0,1,1],[1,0,1],[1,1,0]]})")); },
             Errc::LengthMismatch);
}

TEST(Json, AllocationRoundTripIsExact) {
  oracle::TestRng rng(3);
  for (const char* name : {"ec:1/3", "ext-uc:1,2/7", "gsplit:-5/3", "counter:R2"}) {
    for (int k = 0; k < 20; ++k) {
      const Problem a = oracle::random_problem(rng, 3 + rng.below(3), 999);
      const Allocation r = parse_rule(name)(a);
      const json j = json::parse(io::to_json(r).dump());
      EXPECT_EQ(io::allocation_from_json(j), r) << name;
    }
  }
}

TEST(Json, WitnessInstanceReplays) {
  GeneratorConfig cfg;
  cfg.seed = 7;
  for (auto [name, id] : {std::pair{"counter:R1", AxiomId::AN}, std::pair{"counter:R9", AxiomId::AD},
                          std::pair{"counter:R7", AxiomId::HOP}, std::pair{"uniform", AxiomId::NT}}) {
    const Rule rule = parse_rule(name);
    const FalsifyResult res = falsify(id, rule, cfg);
    ASSERT_TRUE(res.found()) << name;
    const json j = json::parse(io::to_json(res).dump());
    EXPECT_EQ(j["id"], axiom_name(id));
    EXPECT_EQ(j["outcome"], "witness");
    EXPECT_EQ(j["trials"], res.trials);
    const AxiomInstance inst = io::instance_from_json(j["witness"]["instance"]);
    const auto again = check_instance(id, rule, inst);
    ASSERT_TRUE(again) << name;
    EXPECT_EQ(again->description, res.witness->description);
  }
}

TEST(Json, AuditReportShape) {
  GeneratorConfig cfg;
  cfg.trials = 50;
  cfg.seed = 11;
  const AuditReport rep = audit(parse_rule("cd"), {AxiomId::AN, AxiomId::NN}, cfg);
  const json j = io::to_json(rep);
  EXPECT_EQ(j["rule"], "cd");
  EXPECT_EQ(j["seed"], 11);
  ASSERT_EQ(j["axioms"].size(), 2u);
  EXPECT_EQ(j["axioms"][0]["outcome"], "no witness");
  EXPECT_EQ(j["axioms"][0]["trials"], 50);
  EXPECT_FALSE(j["axioms"][0].contains("witness"));
  EXPECT_TRUE(j["axioms"][1].contains("witness"));
  EXPECT_EQ(j["config"]["trials"], 50);
}

TEST(Json, DecompositionAndMembership) {
  const json d = io::to_json(decompose(parse_rule("cd"), 3));
  EXPECT_EQ(d["consistent"], true);
  EXPECT_EQ(d["z"], "-1");
  const json ms = io::to_json(classify(parse_rational("0.9"), parse_rational("0.6"), 3));
  bool saw = false;
  for (const json& m : ms) {
    if (m["family"] == "extended EC") {
      saw = true;
      EXPECT_EQ(m["params"]["lambda"], "1/5");
    }
  }
  EXPECT_TRUE(saw);
}

}  // namespace
