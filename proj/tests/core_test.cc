// Copyright 2026 The gtcorr Authors.
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

#include <random>
#include <string>

#include "gtcorr/errors.h"
#include "gtcorr/fixtures.h"
#include "gtcorr/game.h"
#include "gtcorr/game_json.h"
#include "gtcorr/strategy.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace gtcorr {
namespace {

using testing::Infoset;
using testing::LoadGame;
using testing::Seq;

TEST(RationalTest, ParsesAndCanonicalizes) {
  EXPECT_EQ(ToString(ParseRational("6/4")), "3/2");
  EXPECT_EQ(ToString(ParseRational("-0/7")), "0");
  EXPECT_EQ(ToString(ParseRational("12")), "12");
  EXPECT_THROW(ParseRational("1/0"), std::invalid_argument);
  EXPECT_THROW(ParseRational("0.5"), std::invalid_argument);
  EXPECT_THROW(ParseRational(""), std::invalid_argument);
  EXPECT_THROW(ParseRational("1/-2"), std::invalid_argument);
}

TEST(RationalTest, DecimalDisplay) {
  EXPECT_EQ(ToDecimal(Rational(1, 5)), "0.2");
  EXPECT_EQ(ToDecimal(Rational(1, 3)), "0.33333333333333333333");
  EXPECT_EQ(ToDecimal(Rational(0)), "0");
}

TEST(RationalTest, FieldLawsHoldExactly) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 997);
  for (int k = 0; k < 500; ++k) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    Rational a1 = a, b1 = b, c1 = c;
    a1.canonicalize();
    b1.canonicalize();
    c1.canonicalize();
    EXPECT_EQ((a1 + b1) + c1, a1 + (b1 + c1));
    EXPECT_EQ(a1 * (b1 + c1), a1 * b1 + a1 * c1);
    EXPECT_EQ(ParseRational(ToString(a1)), a1);
    EXPECT_EQ(ToString(ParseRational(ToString(a1))), ToString(a1));
  }
}

TEST(GameTest, EbosShape) {
  const Game g = LoadGame("ebos.game.json");
  EXPECT_EQ(g.num_players(), 2);
  EXPECT_EQ(g.num_infosets(0), 3);
  EXPECT_EQ(g.num_infosets(1), 1);
  EXPECT_EQ(g.num_terminals(), 8);
  EXPECT_EQ(g.infoset(1, 0).nodes.size(), 4u);
  EXPECT_GE(g.FindTerminal("(¬U,X1,X2)"), 0);
}

TEST(GameTest, LrrShapeAndSequences) {
  const Game g = LoadGame("lrr.game.json");
  EXPECT_EQ(g.num_players(), 1);
  EXPECT_EQ(g.num_infosets(0), 2);
  EXPECT_EQ(g.num_terminals(), 3);
  ASSERT_EQ(g.num_sequences(0), 5);
  std::vector<std::string> names;
  for (int s = 0; s < g.num_sequences(0); ++s) names.push_back(g.SequenceName(0, s));
  EXPECT_EQ(names, (std::vector<std::string>{"∅", "R0:L", "R0:R", "B:L′", "B:R′"}));
  EXPECT_TRUE(g.SequencePrecedes(0, Seq(g, 0, "R0:R"), Seq(g, 0, "B:L′")));
  EXPECT_FALSE(g.SequencePrecedes(0, Seq(g, 0, "R0:L"), Seq(g, 0, "B:L′")));
  EXPECT_TRUE(g.SequencePrecedesInfoset(0, Seq(g, 0, "R0:R"), Infoset(g, 0, "B")));
  EXPECT_EQ(g.infoset(0, Infoset(g, 0, "B")).parent_sequence, Seq(g, 0, "R0:R"));
}

TEST(GameTest, EbosPlayerTwoHasOneInfoset) {
  const Game g = LoadGame("ebos.game.json");
  ASSERT_EQ(g.num_sequences(1), 3);
  EXPECT_EQ(g.SequenceName(1, 1), "P2:X2");
  EXPECT_EQ(g.SequenceName(1, 2), "P2:Y2");
}

TEST(GameTest, SmallestLegalGame) {
  const Game g = ParseGame(R"({"players":["solo"],"root":{"kind":"terminal","payoffs":["0"]}})");
  EXPECT_EQ(g.num_terminals(), 1);
  EXPECT_EQ(g.num_infosets(0), 0);
  EXPECT_EQ(g.num_sequences(0), 1);
  EXPECT_EQ(g.chance_reach(0), 1);
}

TEST(GameTest, PrecedenceIsAPartialOrder) {
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    const Game g = LoadGame(name);
    for (int p = 0; p < g.num_players(); ++p) {
      const int ns = g.num_sequences(p);
      for (int s = 0; s < ns; ++s) {
        EXPECT_TRUE(g.SequencePrecedes(p, s, s));
        EXPECT_TRUE(g.SequencePrecedes(p, 0, s));
        for (int t = 0; t < ns; ++t) {
          if (s != t && g.SequencePrecedes(p, s, t)) EXPECT_FALSE(g.SequencePrecedes(p, t, s));
          for (int u = 0; u < ns; ++u) {
            if (g.SequencePrecedes(p, s, t) && g.SequencePrecedes(p, t, u)) {
              EXPECT_TRUE(g.SequencePrecedes(p, s, u));
            }
          }
        }
      }
    }
  }
}

TEST(GameTest, ChanceReach) {
  const Game surj = LoadGame("surj.game.json");
  for (int z = 0; z < surj.num_terminals(); ++z) EXPECT_EQ(surj.chance_reach(z), Rational(1, 2));
  const Game lrr = LoadGame("lrr.game.json");
  EXPECT_EQ(lrr.chance_reach(lrr.FindTerminal("(L)")), 1);
  const Game stacked = ParseGame(R"({"players":["a"],"root":{"kind":"chance","actions":[
      {"label":"x","prob":"1/2","child":{"kind":"chance","actions":[
         {"label":"u","prob":"1/2","child":{"kind":"terminal","payoffs":["1"]}},
         {"label":"v","prob":"1/2","child":{"kind":"terminal","payoffs":["0"]}}]}},
      {"label":"y","prob":"1/2","child":{"kind":"terminal","payoffs":["0"]}}]}})");
  EXPECT_EQ(stacked.chance_reach(stacked.FindTerminal("(x,u)")), Rational(1, 4));
}

TEST(GameTest, EveryPureProfileReachesProbabilityOne) {
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    const Game g = LoadGame(name);
    std::vector<std::vector<PureStrategy>> all;
    for (int p = 0; p < g.num_players(); ++p) all.push_back(AllPureStrategies(g, p));
    std::vector<size_t> idx(g.num_players(), 0);
    while (true) {
      std::vector<std::vector<char>> reached;
      for (int p = 0; p < g.num_players(); ++p) reached.push_back(ReachedSequences(g, all[p][idx[p]]));
      Rational total = 0;
      for (int z = 0; z < g.num_terminals(); ++z) {
        bool on = true;
        for (int p = 0; p < g.num_players(); ++p) on = on && reached[p][g.TerminalSequence(z, p)];
        if (on) total += g.chance_reach(z);
      }
      EXPECT_EQ(total, 1) << name;
      int p = g.num_players() - 1;
      while (p >= 0 && ++idx[p] == all[p].size()) idx[p--] = 0;
      if (p < 0) break;
    }
  }
}

TEST(ValidateTest, FixturesAreValid) {
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    EXPECT_TRUE(Validate(ParseGameTree(FixtureText(name))).ok) << name;
  }
}

TEST(ValidateTest, PerfectRecallViolation) {
  const ValidationReport r =
      Validate(ParseGameTree(FixtureText("invalid/perfect_recall.game.json")));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kPerfectRecall);
  EXPECT_THROW(Game::FromTree(ParseGameTree(FixtureText("invalid/perfect_recall.game.json"))),
               GameError);
}

TEST(ValidateTest, ChanceSumViolation) {
  const ValidationReport r = Validate(ParseGameTree(FixtureText("invalid/chance_sum.game.json")));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kChanceSum);
  EXPECT_NE(r.violations[0].message.find("5/6"), std::string::npos);
}

TEST(ValidateTest, InfosetActionMismatch) {
  const ValidationReport r = Validate(ParseGameTree(R"({"players":["a","b"],"root":
    {"kind":"decision","player":0,"infoset":"A","actions":[
      {"label":"l","child":{"kind":"decision","player":1,"infoset":"J","actions":[
        {"label":"x","child":{"kind":"terminal","payoffs":["0","0"]}}]}},
      {"label":"r","child":{"kind":"decision","player":1,"infoset":"J","actions":[
        {"label":"y","child":{"kind":"terminal","payoffs":["0","0"]}}]}}]}})"));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kInfosetActionMismatch);
}

TEST(ValidateTest, TreeShapeViolation) {
  const ValidationReport r = Validate(ParseGameTree(
      R"({"players":["a"],"root":{"kind":"decision","player":0,"infoset":"A","actions":[]}})"));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::kTreeShape);
}

TEST(ParseTest, TruncatedDocumentReportsLineAndColumn) {
  try {
    ParseGameTree(FixtureText("invalid/truncated.game.json"));
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where().rfind("line ", 0), 0u) << e.what();
  }
}

TEST(ParseTest, SchemaErrorsCarryPaths) {
  try {
    ParseGameTree(R"({"players":["a","b"],"root":{"kind":"terminal","payoffs":["1"]}})");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.where(), "/root/payoffs");
  }
  EXPECT_THROW(ParseGameTree(R"({"players":["a"],"root":{"kind":"oops"}})"), ParseError);
  EXPECT_THROW(ParseGameTree(R"({"players":["a"],"root":{"kind":"decision","player":3,
      "infoset":"I","actions":[]}})"),
               ParseError);
}

TEST(ParseTest, SerializationIsACanonicalFixpoint) {
  for (const std::string& name : FixtureNames()) {
    if (name.find(".game.json") == std::string::npos || name.rfind("invalid/", 0) == 0) continue;
    const std::string once = SerializeGame(ParseGameTree(FixtureText(name)));
    EXPECT_EQ(once, SerializeGame(ParseGameTree(once))) << name;
    // The bundled files are stored canonically.
    EXPECT_EQ(once, FixtureText(name)) << name;
  }
  const std::string messy =
      R"({"root":{"payoffs":["2/4"],"kind":"terminal"},"players":["x"]})";
  const std::string canon = SerializeGame(ParseGameTree(messy));
  EXPECT_NE(canon.find("\"1/2\""), std::string::npos);
  EXPECT_EQ(canon, SerializeGame(ParseGameTree(canon)));
}

TEST(GameTest, FindPlayerAcceptsNamesAndIndices) {
  const Game g = LoadGame("ebos.game.json");
  EXPECT_EQ(g.FindPlayer("P2"), 1);
  EXPECT_EQ(g.FindPlayer("1"), 0);
  EXPECT_THROW(g.FindPlayer("0"), GameError);
  EXPECT_THROW(g.FindPlayer("7"), GameError);
  EXPECT_THROW(g.ParseSequence(0, "nowhere:X"), GameError);
}

TEST(GameTest, RecommendationStateCount) {
  const Game lrr = LoadGame("lrr.game.json");
  EXPECT_EQ(lrr.RecommendationStateCount(0), 2u + 4u);
  const Game ebos = LoadGame("ebos.game.json");
  EXPECT_EQ(ebos.RecommendationStateCount(0), 2u + 4u + 4u);
}

}  // namespace
}  // namespace gtcorr
