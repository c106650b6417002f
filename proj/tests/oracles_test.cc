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

#include "gtcorr/errors.h"
#include "gtcorr/metrics.h"
#include "gtcorr/oracles.h"
#include "gtcorr/random_games.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace gtcorr {
namespace {

using testing::Infoset;
using testing::LoadGame;
using testing::LoadProfile;
using testing::Pure;

constexpr GapNotion kNotions[] = {GapNotion::kEfce, GapNotion::kBce, GapNotion::kFullEfce,
                                  GapNotion::kNfcce};

int Index(const Game& g, int player, const std::string& text) {
  return static_cast<int>(PureStrategyIndex(g, Pure(g, player, text)));
}

TEST(EnumeratePureTest, Examples) {
  const Game lrr = LoadGame("lrr.game.json");
  EXPECT_EQ(EnumeratePure(lrr, 0).size(), 4u);
  EXPECT_EQ(EnumeratePure(LoadGame("ebos.game.json"), 1).size(), 2u);
  EXPECT_THROW(EnumeratePure(LoadGame("ebos.game.json"), 0, 4), ResourceLimitError);
}

TEST(ClassTest, LrrExamples) {
  const Game g = LoadGame("lrr.game.json");
  const DeviationTable identity = {0, 1, 2, 3};
  EXPECT_TRUE(IsCausal(g, 0, identity));
  EXPECT_TRUE(IsBehavioral(g, 0, identity));
  for (int y = 0; y < 4; ++y) {
    EXPECT_TRUE(IsCausal(g, 0, DeviationTable(4, y)));
    EXPECT_TRUE(IsConstant(DeviationTable(4, y)));
  }
  // (L,R′) stays, (L,L′) goes to (R,L′): the root output differs although
  // both recommend L there.
  DeviationTable phi = identity;
  phi[Index(g, 0, "R0:L,B:L′")] = Index(g, 0, "R0:R,B:L′");
  EXPECT_FALSE(IsCausal(g, 0, phi));
  // At B, copy the root letter: L -> L′, R -> R′, whatever B recommended.
  DeviationTable copy(4);
  for (int x = 0; x < 4; ++x) {
    const PureStrategy xs = PureStrategyAt(g, 0, x);
    copy[x] = Index(g, 0, std::string("R0:") + (xs.actions[0] == 0 ? "L" : "R") + ",B:" +
                              (xs.actions[0] == 0 ? "L′" : "R′"));
  }
  EXPECT_TRUE(IsBehavioral(g, 0, copy));
}

TEST(ClassTest, LrrHierarchyIsStrict) {
  const Game g = LoadGame("lrr.game.json");
  int constant = 0, causal = 0, behavioral = 0, all = 0;
  DeviationTable phi(4, 0);
  while (true) {
    ++all;
    constant += IsConstant(phi);
    const bool c = IsCausal(g, 0, phi);
    const bool b = IsBehavioral(g, 0, phi);
    causal += c;
    behavioral += b;
    EXPECT_TRUE(!c || b);
    int k = 3;
    while (k >= 0 && ++phi[k] == 4) phi[k--] = 0;
    if (k < 0) break;
  }
  EXPECT_EQ(all, 256);
  EXPECT_LT(constant, causal);
  EXPECT_LT(causal, behavioral);
  EXPECT_LT(behavioral, all);
}

void ExpectAgreement(const Game& g, const MixtureOfProducts& pi, const std::string& what) {
  for (GapNotion notion : kNotions) {
    SCOPED_TRACE(what + " " + std::string(GapNotionName(notion)));
    const GapReport dp = ComputeGap(g, pi, notion);
    const OracleReport oracle = BruteForceGap(g, pi, notion);
    EXPECT_EQ(dp.gap, oracle.report.gap) << what << " " << GapNotionName(notion);
    EXPECT_EQ(dp.per_player, oracle.report.per_player) << what << " " << GapNotionName(notion);
    if (notion == GapNotion::kBce) {
      EXPECT_EQ(dp.per_infoset, oracle.report.per_infoset) << what;
    }
    if (oracle.report.gap > 0) {
      const int i = oracle.report.witness_player;
      const DeviationTable& phi = oracle.report.witness.table;
      const Rational regret =
          notion == GapNotion::kBce
              ? TableCounterfactualRegret(g, pi, i, phi, oracle.report.witness_infoset)
              : TableRegret(g, pi, i, phi);
      EXPECT_EQ(regret, oracle.report.gap) << what;
    }
  }
}

TEST(OracleAgreementTest, Fixtures) {
  const Game ebos = LoadGame("ebos.game.json");
  ExpectAgreement(ebos, LoadProfile(ebos, "ebos.pi.json"), "ebos pi");
  ExpectAgreement(ebos, LoadProfile(ebos, "ebos.pi_prime.json"), "ebos pi'");
  const Game lrr = LoadGame("lrr.game.json");
  ExpectAgreement(lrr, LoadProfile(lrr, "lrr.pi.behavior.json", true), "lrr pi");
  ExpectAgreement(lrr, LoadProfile(lrr, "lrr.pi_prime.json"), "lrr pi'");
  ExpectAgreement(lrr, LoadProfile(lrr, "lrr.pure_lr.json"), "lrr (L,R′)");
  const Game surj = LoadGame("surj.game.json");
  ExpectAgreement(surj, LoadProfile(surj, "surj.bce.json"), "surj");
}

TEST(OracleAgreementTest, LrrPiPrimeBce) {
  const Game g = LoadGame("lrr.game.json");
  const OracleReport r = BruteForceGap(g, LoadProfile(g, "lrr.pi_prime.json"), GapNotion::kBce);
  EXPECT_EQ(r.report.gap, Rational(1, 5));
  EXPECT_EQ(r.report.per_infoset[0][Infoset(g, 0, "B")], Rational(1, 10));
}

TEST(OracleAgreementTest, RandomTinyGames) {
  std::mt19937_64 rng(7);
  RandomGameOptions options;
  options.max_nodes = 10;
  int checked = 0;
  for (int k = 0; k < 120; ++k) {
    const Game g = RandomGame(rng, options);
    const MixtureOfProducts pi = RandomProfile(g, rng, 2);
    try {
      for (GapNotion notion : kNotions) BruteForceGap(g, pi, notion);
    } catch (const ResourceLimitError&) {
      continue;  // too large for the definitional enumeration
    }
    ExpectAgreement(g, pi, "random game " + std::to_string(k));
    ++checked;
  }
  EXPECT_GE(checked, 50);
}

TEST(OracleTest, KeyedPoliciesMatchRawTables) {
  const Game g = LoadGame("surj.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "surj.bce.json");
  OracleOptions keyed;
  keyed.table_cap = 0;
  for (GapNotion notion : {GapNotion::kEfce, GapNotion::kBce, GapNotion::kFullEfce}) {
    const OracleReport a = BruteForceGap(g, pi, notion);
    const OracleReport b = BruteForceGap(g, pi, notion, keyed);
    EXPECT_EQ(b.method[0], OracleMethod::kKeyedPolicies);
    EXPECT_EQ(a.report.per_player, b.report.per_player) << GapNotionName(notion);
  }
}

TEST(OracleTest, RefusesBeyondCaps) {
  const Game g = LoadGame("surj.game.json");
  OracleOptions tight;
  tight.table_cap = 0;
  tight.policy_cap = 1;
  EXPECT_THROW(BruteForceGap(g, LoadProfile(g, "surj.bce.json"), GapNotion::kBce, tight),
               ResourceLimitError);
}

TEST(ExpandedReachTest, MatchesFactorized) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    const Game g = RandomGame(rng);
    const MixtureOfProducts pi = RandomProfile(g, rng, 2);
    for (int i = 0; i < g.num_players(); ++i) {
      for (int s = 0; s < g.num_sequences(i); ++s) {
        const ConditionalReach a = ComputeConditionalReach(g, pi, i, s);
        const ConditionalReach b = ExpandedConditionalReach(g, pi, i, s);
        EXPECT_EQ(a.event_mass, b.event_mass);
        EXPECT_EQ(a.reach, b.reach);
      }
    }
  }
}

}  // namespace
}  // namespace gtcorr
