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

#include "gtcorr/errors.h"
#include "gtcorr/game_json.h"
#include "gtcorr/metrics.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace gtcorr {
namespace {

using testing::Infoset;
using testing::LoadGame;
using testing::LoadProfile;
using testing::Pure;
using testing::Seq;

TEST(UtilityTest, EbosBothPlayersGetThreeHalves) {
  const Game g = LoadGame("ebos.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "ebos.pi.json");
  EXPECT_EQ(ExpectedUtility(g, pi, 0), Rational(3, 2));
  EXPECT_EQ(ExpectedUtility(g, pi, 1), Rational(3, 2));
}

TEST(UtilityTest, LrrBehavior) {
  const Game g = LoadGame("lrr.game.json");
  EXPECT_EQ(ExpectedUtility(g, LoadProfile(g, "lrr.pi.behavior.json", true), 0), Rational(9, 5));
}

TEST(UtilityTest, ConstantGame) {
  const Game g = ParseGame(R"({"players":["a","b"],"root":{"kind":"decision","player":0,
    "infoset":"I","actions":[{"label":"x","child":{"kind":"terminal","payoffs":["7/3","7/3"]}},
                             {"label":"y","child":{"kind":"terminal","payoffs":["7/3","7/3"]}}]}})");
  const MixtureOfProducts pi = MixtureFromBehaviorProducts(
      g, {{Rational(1), {BehaviorStrategy{0, {{Rational(1, 5), Rational(4, 5)}}},
                         BehaviorStrategy{1, {}}}}});
  EXPECT_EQ(ExpectedUtility(g, pi, 0), Rational(7, 3));
}

TEST(OutcomeTest, EbosPi) {
  const Game g = LoadGame("ebos.game.json");
  const OutcomeDistribution d = ComputeOutcomeDistribution(g, LoadProfile(g, "ebos.pi.json"));
  Rational total = 0;
  for (int z = 0; z < g.num_terminals(); ++z) {
    total += d[z];
    const std::string& id = g.terminal_id(z);
    EXPECT_EQ(d[z], (id == "(¬U,X1,X2)" || id == "(¬U,Y1,Y2)") ? Rational(1, 2) : Rational(0));
  }
  EXPECT_EQ(total, 1);
}

TEST(OutcomeTest, LrrPiAndPiPrimeAgree) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "lrr.pi.behavior.json", true);
  const MixtureOfProducts pi_prime = LoadProfile(g, "lrr.pi_prime.json");
  const OutcomeDistribution d = ComputeOutcomeDistribution(g, pi);
  EXPECT_EQ(d[g.FindTerminal("(L)")], Rational(9, 10));
  EXPECT_EQ(d[g.FindTerminal("(R,R′)")], Rational(1, 10));
  EXPECT_TRUE(OutcomeEquivalent(g, pi, pi_prime));
  EXPECT_FALSE(OutcomeEquivalent(g, pi, LoadProfile(g, "lrr.pure_lr.json")));
}

TEST(OutcomeTest, PurePointMassSpreadsOverChance) {
  const Game g = LoadGame("surj.game.json");
  const PureProfile x = {Pure(g, 0, "P1:H1"), Pure(g, 1, "MP2:T2,Coop:E,S:H2′")};
  const OutcomeDistribution d = ComputeOutcomeDistribution(g, MixtureFromPureProfiles({{1, x}}));
  EXPECT_EQ(d[g.FindTerminal("(MP,H1,T2)")], Rational(1, 2));
  EXPECT_EQ(d[g.FindTerminal("(Coop,E)")], Rational(1, 2));
}

TEST(CounterfactualTest, LrrAtB) {
  const Game g = LoadGame("lrr.game.json");
  const int B = Infoset(g, 0, "B");
  EXPECT_EQ(CounterfactualUtility(g, PureProfile{Pure(g, 0, "R0:L,B:R′")}, 0, B), 0);
  EXPECT_EQ(CounterfactualUtility(g, PureProfile{Pure(g, 0, "R0:L,B:L′")}, 0, B), 1);
}

TEST(CounterfactualTest, RootOfOnePlayerGameIsExpectedUtility) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "lrr.pi_prime.json");
  EXPECT_EQ(CounterfactualUtility(g, pi, 0, Infoset(g, 0, "R0")), ExpectedUtility(g, pi, 0));
}

TEST(ConditionalReachTest, Ebos) {
  const Game g = LoadGame("ebos.game.json");
  const ConditionalReach r =
      ComputeConditionalReach(g, LoadProfile(g, "ebos.pi.json"), 0, Seq(g, 0, "root:¬U"));
  EXPECT_EQ(r.event_mass, 1);
  EXPECT_EQ(r.reach[g.FindTerminal("(¬U,X1,X2)")], Rational(1, 2));
  EXPECT_EQ(r.reach[g.FindTerminal("(¬U,Y1,Y2)")], Rational(1, 2));
  EXPECT_EQ(r.reach[g.FindTerminal("(U,Y1,Y2)")], Rational(1, 2));
}

TEST(ConditionalReachTest, LrrPiPrime) {
  const Game g = LoadGame("lrr.game.json");
  const ConditionalReach r =
      ComputeConditionalReach(g, LoadProfile(g, "lrr.pi_prime.json"), 0, Seq(g, 0, "R0:R"));
  EXPECT_EQ(r.event_mass, Rational(1, 10));
  EXPECT_EQ(r.reach[g.FindTerminal("(R,L′)")], Rational(1, 10));
  EXPECT_EQ(r.reach[g.FindTerminal("(R,R′)")], Rational(1, 10));
  const ConditionalReach root =
      ComputeConditionalReach(g, LoadProfile(g, "lrr.pi_prime.json"), 0, 0);
  EXPECT_EQ(root.event_mass, 1);
}

TEST(EquivalenceTest, CounterfactualOutcomeEquivalence) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pure = LoadProfile(g, "lrr.pure_lr.json");
  const MixtureOfProducts pi_prime = LoadProfile(g, "lrr.pi_prime.json");
  EXPECT_TRUE(CounterfactuallyOutcomeEquivalent(g, pure, pure));
  EXPECT_FALSE(CounterfactuallyOutcomeEquivalent(g, pure, pi_prime));
  // Same outcomes, different reach below an unreached infoset.
  const MixtureOfProducts other = MixtureFromPureProfiles({{1, {Pure(g, 0, "R0:L,B:L′")}}});
  EXPECT_TRUE(OutcomeEquivalent(g, pure, other));
  EXPECT_FALSE(CounterfactuallyOutcomeEquivalent(g, pure, other));
}

TEST(GapTest, EbosPi) {
  const Game g = LoadGame("ebos.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "ebos.pi.json");
  EXPECT_EQ(ComputeGap(g, pi, GapNotion::kEfce).gap, 0);
  const GapReport bce = ComputeGap(g, pi, GapNotion::kBce);
  EXPECT_EQ(bce.gap, 1);
  EXPECT_EQ(bce.witness_player, 0);
  EXPECT_EQ(bce.witness_infoset, Infoset(g, 0, "root"));
  EXPECT_EQ(ComputeGap(g, LoadProfile(g, "ebos.pi_prime.json"), GapNotion::kBce).gap, 0);
}

TEST(GapTest, LrrPi) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "lrr.pi.behavior.json", true);
  const GapReport efce = ComputeGap(g, pi, GapNotion::kEfce);
  EXPECT_EQ(efce.gap, Rational(1, 5));
  ASSERT_EQ(efce.witness.triggers.size(), 1u);
  EXPECT_EQ(efce.witness.triggers[0].first, Seq(g, 0, "R0:R"));
  const GapReport bce = ComputeGap(g, pi, GapNotion::kBce);
  EXPECT_EQ(bce.gap, 1);
  EXPECT_EQ(bce.per_infoset[0][Infoset(g, 0, "B")], 1);
  EXPECT_EQ(bce.per_infoset[0][Infoset(g, 0, "R0")], Rational(1, 5));
  EXPECT_EQ(ComputeGap(g, pi, GapNotion::kFullEfce).gap, Rational(1, 5));
  EXPECT_EQ(ComputeGap(g, pi, GapNotion::kNfcce).gap, Rational(1, 5));
}

TEST(GapTest, LrrPiPrime) {
  const Game g = LoadGame("lrr.game.json");
  const GapReport bce = ComputeGap(g, LoadProfile(g, "lrr.pi_prime.json"), GapNotion::kBce);
  // At B, always playing L′ gains 1 - 9/10. At the root, playing L on
  // recommendation R gains 1/10 * 2, which dominates.
  EXPECT_EQ(bce.per_infoset[0][Infoset(g, 0, "B")], Rational(1, 10));
  EXPECT_EQ(bce.per_infoset[0][Infoset(g, 0, "R0")], Rational(1, 5));
  EXPECT_EQ(bce.gap, Rational(1, 5));
}

TEST(GapTest, ResourceGuardRefuses) {
  const Game g = LoadGame("ebos.game.json");
  EXPECT_THROW(ComputeGap(g, LoadProfile(g, "ebos.pi.json"), GapNotion::kBce, 3),
               ResourceLimitError);
  EXPECT_NO_THROW(ComputeGap(g, LoadProfile(g, "ebos.pi.json"), GapNotion::kEfce, 3));
}

TEST(GapTest, NotionNames) {
  EXPECT_EQ(ParseGapNotion("full-efce"), GapNotion::kFullEfce);
  EXPECT_THROW(ParseGapNotion("nash"), std::invalid_argument);
}

TEST(BestResponseTest, TiesGoToTheFirstLabel) {
  const Game g = LoadGame("lrr.game.json");
  const BestResponse br =
      ComputeBestResponse(g, 0, -1, std::vector<Rational>(g.num_terminals(), Rational(0)));
  EXPECT_EQ(br.strategy, Pure(g, 0, "R0:L,B:L′"));
  EXPECT_EQ(br.value, 0);
}

TEST(SubtreeUtilityTest, SurjBce) {
  const Game g = LoadGame("surj.game.json");
  EXPECT_EQ(ConditionalSubtreeUtility(g, LoadProfile(g, "surj.bce.json"), 0, 1,
                                      Infoset(g, 1, "S")),
            1);
}

}  // namespace
}  // namespace gtcorr
