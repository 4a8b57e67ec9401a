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

#include <string>
#include <vector>

#include "broadcast/broadcast.hpp"
#include "oracle.hpp"

namespace {

using namespace broadcast;
using oracle::shares;

Rational q(const char* s) { return parse_rational(s); }

Allocation eval(const char* name, const Problem& a) { return parse_rule(name)(a); }

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::ParseError;
}

TEST(Example1, FocalRules) {
  const Problem a = oracle::example1();
  EXPECT_EQ(eval("uniform", a), shares({1320, 1320, 1320}));
  EXPECT_EQ(eval("equal-split", a), shares({1805, 1150, 1005}));
  EXPECT_EQ(eval("cd", a), shares({3260, 640, 60}));
}

TEST(Example1, SplitRules) {
  const Problem a = oracle::example1();
  EXPECT_EQ(eval("split:0", a), shares({2230, 890, 840}));
  EXPECT_EQ(eval("split:0.2", a), shares({2060, 994, 906}));
  EXPECT_EQ(eval("split:1", a), shares({1380, 1410, 1170}));
  EXPECT_EQ(eval("gsplit:4", a), shares({-1170, 2970, 2160}));
}

TEST(Example1, GeneralAndMixedRules) {
  const Problem a = oracle::example1();
  EXPECT_EQ(eval("general:0.5,0.2,0.1", a), shares({1787, 1123, 1050}));
  EXPECT_EQ(eval("general:1,3,-1", a), shares({2410, 1160, 390}));
  EXPECT_EQ(eval("ec:0.5", a), shares({q("2532.5"), 895, q("532.5")}));
  EXPECT_EQ(eval("uc:0.5", a), shares({2290, 980, 690}));
  EXPECT_EQ(eval("ue:0.5", a), shares({q("1562.5"), 1235, q("1162.5")}));
}

TEST(Example1, ExtendedEcMatchesUnitOracle) {
  const Problem a = oracle::example1();
  const Allocation direct = eval("ext-ec:0.9,0.6", a);
  EXPECT_EQ(direct, oracle::from_signature(q("0.9"), q("0.6"), a));
  EXPECT_EQ(direct, shares({2660, 817, 483}));
}

TEST(Evaluate, UniformOnZeroMatrix) {
  EXPECT_EQ(eval("uniform", Problem::zero(5)), shares({0, 0, 0, 0, 0}));
}

TEST(MakeRule, ParameterGates) {
  EXPECT_NO_THROW(make_rule(spec::ExtendedEC{q("0.9"), q("0.6")}));
  EXPECT_EQ(error_of([] { make_rule(spec::ExtendedEC{q("0.3"), q("0.4")}); }), Errc::ParamOutOfRange);
  EXPECT_NO_THROW(make_rule(spec::General{1, 3, -1}, 3));
  EXPECT_EQ(error_of([] { make_rule(spec::General{1, 3, -1}, 4); }), Errc::ConstraintViolated);
  EXPECT_EQ(error_of([] { make_rule(spec::Split{q("1.5")}); }), Errc::ParamOutOfRange);
  EXPECT_NO_THROW(make_rule(spec::GeneralizedSplit{q("-7")}));
  for (const char* bad : {"ec:-0.1", "uc:2", "ue:1.01"}) {
    EXPECT_EQ(error_of([&] { parse_rule(bad); }), Errc::ParamOutOfRange) << bad;
  }
}

TEST(MakeRule, SizeDependentBoundsRecheckedAtEvaluation) {
  // max = 0.3 is at least 1/4 but below 1/3.
  const Rule r = parse_rule("ext-uc:0.3,0.3");
  EXPECT_NO_THROW(r(Problem::zero(4)));
  EXPECT_EQ(error_of([&] { r(Problem::zero(3)); }), Errc::ParamOutOfRange);
  EXPECT_EQ(error_of([] { parse_rule("ext-uc:0.3,0.3", 3); }), Errc::ParamOutOfRange);
  const Rule g = parse_rule("general:1,3,-1");
  EXPECT_EQ(error_of([&] { g(Problem::zero(4)); }), Errc::ConstraintViolated);
}

TEST(MakeRule, ExtendedUeRegion) {
  EXPECT_NO_THROW(parse_rule("ext-ue:0.5,0.2", 4));
  // min = 0.6 exceeds 1 - max.
  EXPECT_EQ(error_of([] { parse_rule("ext-ue:0.9,0.6", 3); }), Errc::ParamOutOfRange);
  // min = 0 lies below (1 - max)/(n - 1) = 1/4.
  EXPECT_EQ(error_of([] { parse_rule("ext-ue:0.5,0", 3); }), Errc::ParamOutOfRange);
}

TEST(Grammar, RoundTripsCanonicalNames) {
  for (const char* name : {"uniform", "equal-split", "cd", "split:1/5", "gsplit:-3/2", "general:1/2,1/5,1/10",
                           "ec:1/2", "uc:0", "ue:1", "ext-ec:9/10,3/5", "ext-uc:1,1/2", "ext-ue:1/2,1/5",
                           "ext:2,2", "counter:R1", "counter:R13", "counter:T1-WETE", "counter:T1-ETE"}) {
    EXPECT_EQ(rule_name(parse_rule_spec(name)), name);
  }
  EXPECT_EQ(parse_rule("split:0.2").name(), "split:1/5");
}

TEST(Grammar, RejectsUnknown) {
  for (const char* bad : {"", "median", "split", "cd:1", "general:1,2", "counter:R14", "ext-ec:1"}) {
    EXPECT_EQ(error_of([&] { parse_rule_spec(bad); }), Errc::UnknownRule) << bad;
  }
  EXPECT_EQ(error_of([] { parse_rule_spec("split:x"); }), Errc::ParseError);
}

TEST(Labels, TableNames) {
  EXPECT_EQ(rule_label(parse_rule_spec("cd")), "CD");
  EXPECT_EQ(rule_label(parse_rule_spec("ec:1/2")), "EC^0.5");
  EXPECT_EQ(rule_label(parse_rule_spec("general:1,3,-1")), "G^(1,3,-1)");
  EXPECT_EQ(rule_label(parse_rule_spec("counter:R8")), "R8");
}

TEST(UnitValues, EqualSplit) {
  const UnitTable t = unit_values(parse_rule("equal-split"), 3);
  ASSERT_EQ(t.entries.size(), 6u);
  for (const auto& e : t.entries) {
    EXPECT_EQ(e.home_share, Rational(1, 2));
    EXPECT_EQ(e.away_share, Rational(1, 2));
    ASSERT_EQ(e.outsiders.size(), 1u);
    EXPECT_EQ(e.outsiders[0].second, 0);
  }
}

TEST(UnitValues, ConcedeAndDivide) {
  for (const auto& e : unit_values(parse_rule("cd"), 3).entries) {
    EXPECT_EQ(e.home_share, 1);
    EXPECT_EQ(e.away_share, 1);
    EXPECT_EQ(e.outsiders[0].second, -1);
  }
}

TEST(UnitValues, ExtendedUeOnFourTeams) {
  // Outsiders get (1 - 0.5 - 0.2)/(4 - 2) = 3/20.
  const UnitTable t = unit_values(parse_rule("ext-ue:0.5,0.2"), 4);
  ASSERT_EQ(t.entries.size(), 12u);
  for (const auto& e : t.entries) {
    EXPECT_EQ(e.home_share, Rational(1, 2));
    EXPECT_EQ(e.away_share, Rational(1, 5));
    for (const auto& [k, v] : e.outsiders) EXPECT_EQ(v, Rational(3, 20)) << k;
  }
  EXPECT_EQ(error_of([] { unit_values(parse_rule("cd"), 2); }), Errc::TooFewTeams);
}

// ---------------------------------------------------------------------------
// Properties over randomly drawn parameters and problems.

std::vector<Rule> sampled_rules(oracle::TestRng& rng, std::size_t n) {
  std::vector<Rule> out;
  auto r = [&](long lo, long hi) { return oracle::random_rational(rng, lo, hi, 20); };
  out.push_back(make_rule(spec::Uniform{}));
  out.push_back(make_rule(spec::EqualSplit{}));
  out.push_back(make_rule(spec::ConcedeAndDivide{}));
  out.push_back(make_rule(spec::Split{r(0, 1)}));
  out.push_back(make_rule(spec::GeneralizedSplit{r(-3, 3)}));
  {
    const Rational x = r(-2, 2), z = r(-1, 1);
    const Rational y = 1 - x - Rational(static_cast<long>(n)) * z;
    out.push_back(make_rule(spec::General{x, y, z}, n));
  }
  out.push_back(make_rule(spec::EC{r(0, 1)}));
  out.push_back(make_rule(spec::UC{r(0, 1)}));
  out.push_back(make_rule(spec::UE{r(0, 1)}));
  {
    const Rational x = r(0, 1);
    Rational y = r(0, 1);
    if (x + y < 1) y = 1 - x;
    out.push_back(make_rule(spec::ExtendedEC{x, y}, n));
  }
  out.push_back(make_rule(spec::ExtendedUC{1, Rational(1, 2)}, n));
  out.push_back(make_rule(spec::ExtendedUE{Rational(1, 2), Rational(1, 2) - Rational(1, 10)}, n));
  out.push_back(make_rule(spec::AdditiveExtension{r(-2, 2), r(-2, 2)}));
  return out;
}

class RuleProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(RuleProperties, BudgetBalanceAndUnitOracle) {
  const std::size_t n = GetParam();
  oracle::TestRng rng(77 + n);
  for (int round = 0; round < 4; ++round) {
    for (const Rule& rule : sampled_rules(rng, n)) {
      for (int k = 0; k < 5; ++k) {
        const Problem a = oracle::random_problem(rng, n, 500);
        const Allocation r = rule(a);
        EXPECT_EQ(r.sum(), a.total()) << rule.name();
        EXPECT_EQ(r, oracle::unit_sum(rule, a)) << rule.name();
      }
    }
  }
}

TEST_P(RuleProperties, EqualSplitIsMixOfUniformAndCd) {
  const std::size_t n = GetParam();
  const Rational nn(static_cast<long>(n));
  oracle::TestRng rng(5 + n);
  for (int k = 0; k < 50; ++k) {
    const Problem a = oracle::random_problem(rng, n, 1000000);
    const Allocation mix = (nn / (2 * (nn - 1))) * family::uniform(a) +
                           ((nn - 2) / (2 * (nn - 1))) * family::concede_and_divide(a);
    EXPECT_EQ(family::equal_split(a), mix);
  }
}

TEST_P(RuleProperties, DiagonalExtendedRulesCollapse) {
  const std::size_t n = GetParam();
  const Rational nn(static_cast<long>(n));
  oracle::TestRng rng(11 + n);
  for (int k = 0; k < 30; ++k) {
    const Problem a = oracle::random_problem(rng, n, 1000);
    const Rational t_ec = oracle::random_rational(rng, 0, 1, 40) / 2 + Rational(1, 2);
    EXPECT_EQ(family::extended_ec(a, t_ec, t_ec), family::ec(a, 2 - 2 * t_ec));

    const Rational t_uc = 1 / nn + (1 - 1 / nn) * oracle::random_rational(rng, 0, 1, 40);
    EXPECT_EQ(family::extended_uc(a, t_uc, t_uc), family::uc(a, nn * (1 - t_uc) / (nn - 1)));

    const Rational t_ue = 1 / nn + (Rational(1, 2) - 1 / nn) * oracle::random_rational(rng, 0, 1, 40);
    EXPECT_EQ(family::extended_ue(a, t_ue, t_ue), family::ue(a, nn * (1 - 2 * t_ue) / (nn - 2)));
  }
}

TEST_P(RuleProperties, NullAndEssentialTeams) {
  const std::size_t n = GetParam();
  oracle::TestRng rng(23 + n);
  for (int k = 0; k < 30; ++k) {
    const Team t = rng.team(n);
    const Rational lambda = oracle::random_rational(rng, -2, 3, 10);
    EXPECT_EQ(family::split(oracle::with_null_team(rng, n, 100, t), lambda)(t), 0);
    const Problem e = oracle::with_essential_team(rng, n, 100, t);
    EXPECT_EQ(family::concede_and_divide(e)(t), e.claim(t));
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, RuleProperties, ::testing::Values(3, 4, 5, 7));

TEST(Relations, UcCoincidesWithEcOrUe) {
  // UC^l has diagonal unit value t = 1 - l(n-1)/n; it is EC^(2-2t) when
  // t >= 1/2 and UE^(n(1-2t)/(n-2)) otherwise.
  for (std::size_t n : {3u, 4u, 6u}) {
    const Rational nn(static_cast<long>(n));
    for (long k = 0; k <= 10; ++k) {
      const Rational l = make_rational(k, 10);
      const Rational t = 1 - l * (nn - 1) / nn;
      const Rule uc = make_rule(spec::UC{l});
      const Rule other = t >= Rational(1, 2) ? make_rule(spec::EC{2 - 2 * t})
                                             : make_rule(spec::UE{nn * (1 - 2 * t) / (nn - 2)});
      EXPECT_EQ(unit_values(uc, n), unit_values(other, n)) << n << " " << l;
    }
  }
}

}  // namespace
