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
#include "gtcorr/fixtures.h"
#include "gtcorr/profile_json.h"
#include "gtcorr/strategy.h"
#include "gtest/gtest.h"
#include "test_support.h"

namespace gtcorr {
namespace {

using testing::Infoset;
using testing::LoadGame;
using testing::LoadProfile;
using testing::Pure;
using testing::Seq;

BehaviorStrategy LrrBehavior(const Game& g) {
  BehaviorStrategy b{0, {}};
  b.locals.resize(2);
  b.locals[Infoset(g, 0, "R0")] = {Rational(9, 10), Rational(1, 10)};
  b.locals[Infoset(g, 0, "B")] = {Rational(0), Rational(1)};
  return b;
}

BehaviorStrategy RandomBehavior(const Game& g, int player, std::mt19937_64& rng) {
  BehaviorStrategy b{player, {}};
  std::uniform_int_distribution<int> w(0, 4);
  for (int I = 0; I < g.num_infosets(player); ++I) {
    std::vector<int> raw(g.num_actions(player, I));
    int total = 0;
    for (int& r : raw) total += (r = w(rng));
    if (total == 0) raw[0] = total = 1;
    std::vector<Rational> local;
    for (int r : raw) local.emplace_back(r, total);
    for (Rational& q : local) q.canonicalize();
    b.locals.push_back(std::move(local));
  }
  return b;
}

TEST(SequenceFormTest, LrrBehavior) {
  const Game g = LoadGame("lrr.game.json");
  const SequenceFormVector v = SequenceForm(g, LrrBehavior(g));
  EXPECT_EQ(v.reach, (std::vector<Rational>{1, Rational(9, 10), Rational(1, 10), 0,
                                            Rational(1, 10)}));
}

TEST(SequenceFormTest, PureLrr) {
  const Game g = LoadGame("lrr.game.json");
  const SequenceFormVector v = SequenceForm(g, Pure(g, 0, "R0:L,B:L′"));
  EXPECT_EQ(v.reach, (std::vector<Rational>{1, 1, 0, 0, 0}));
}

TEST(SequenceFormTest, UniformSingleInfoset) {
  const Game g = LoadGame("ebos.game.json");
  const SequenceFormVector v = SequenceForm(g, BehaviorStrategy{1, {{Rational(1, 2), Rational(1, 2)}}});
  EXPECT_EQ(v.reach, (std::vector<Rational>{1, Rational(1, 2), Rational(1, 2)}));
}

TEST(SequenceFormTest, PureIsIndicatorProduct) {
  const Game g = LoadGame("ebos.game.json");
  for (const PureStrategy& x : AllPureStrategies(g, 0)) {
    const SequenceFormVector v = SequenceForm(g, x);
    for (int s = 1; s < g.num_sequences(0); ++s) {
      const Sequence& seq = g.sequence(0, s);
      const Rational at_I = v.reach[g.infoset(0, seq.infoset).parent_sequence];
      EXPECT_EQ(v.reach[s], at_I * (x.actions[seq.infoset] == seq.action ? 1 : 0));
    }
  }
}

TEST(DecomposeTest, LrrExample) {
  const Game g = LoadGame("lrr.game.json");
  const auto terms = Decompose(g, SequenceForm(g, LrrBehavior(g)));
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].beta, Rational(9, 10));
  EXPECT_EQ(terms[0].strategy, Pure(g, 0, "R0:L,B:L′"));
  EXPECT_EQ(terms[1].beta, Rational(1, 10));
  EXPECT_EQ(terms[1].strategy, Pure(g, 0, "R0:R,B:R′"));
}

TEST(DecomposeTest, PureIsExtreme) {
  const Game g = LoadGame("surj.game.json");
  for (int p = 0; p < 2; ++p) {
    for (const PureStrategy& x : AllPureStrategies(g, p)) {
      const auto terms = Decompose(g, SequenceForm(g, x));
      ASSERT_EQ(terms.size(), 1u);
      EXPECT_EQ(terms[0].beta, 1);
      // Off-path infosets may differ; the reach vector may not.
      EXPECT_EQ(SequenceForm(g, terms[0].strategy), SequenceForm(g, x));
    }
  }
}

TEST(DecomposeTest, UniformOverTwoActions) {
  const Game g = LoadGame("ebos.game.json");
  const auto terms = Decompose(g, SequenceFormVector{1, {1, Rational(1, 2), Rational(1, 2)}});
  ASSERT_EQ(terms.size(), 2u);
  EXPECT_EQ(terms[0].beta, Rational(1, 2));
  EXPECT_EQ(terms[1].beta, Rational(1, 2));
  EXPECT_NE(terms[0].strategy, terms[1].strategy);
}

TEST(DecomposeTest, RejectsInvalidVectors) {
  const Game g = LoadGame("lrr.game.json");
  EXPECT_THROW(Decompose(g, SequenceFormVector{0, {1, Rational(1, 2), Rational(1, 3), 0, 0}}),
               InvalidProfileError);
  EXPECT_THROW(Decompose(g, SequenceFormVector{0, {1, 2, -1, 0, -1}}), InvalidProfileError);
}

TEST(DecomposeTest, RandomRoundTrip) {
  std::mt19937_64 rng(42);
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    const Game g = LoadGame(name);
    for (int p = 0; p < g.num_players(); ++p) {
      for (int k = 0; k < 100; ++k) {
        const SequenceFormVector v = SequenceForm(g, RandomBehavior(g, p, rng));
        const auto terms = Decompose(g, v);
        EXPECT_LE(terms.size(), static_cast<size_t>(g.num_sequences(p)));
        std::vector<Rational> sum(v.reach.size(), Rational(0));
        Rational total = 0;
        for (const auto& [beta, x] : terms) {
          EXPECT_GT(beta, 0);
          total += beta;
          const SequenceFormVector xv = SequenceForm(g, x);
          for (size_t s = 0; s < sum.size(); ++s) sum[s] += beta * xv.reach[s];
        }
        EXPECT_EQ(total, 1);
        EXPECT_EQ(sum, v.reach);
        EXPECT_EQ(Decompose(g, v).size(), terms.size());  // deterministic
      }
    }
  }
}

TEST(MixtureTest, FromBehaviorProductsLrr) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = MixtureFromBehaviorProducts(g, {{Rational(1), {LrrBehavior(g)}}});
  ASSERT_EQ(pi.components.size(), 1u);
  ASSERT_EQ(pi.components[0].strategies[0].size(), 2u);
  const auto support = ProfileSupport(pi);
  ASSERT_EQ(support.size(), 2u);
  EXPECT_EQ(support[0].first, Rational(9, 10));
  EXPECT_EQ(support[0].second[0], Pure(g, 0, "R0:L,B:L′"));
}

TEST(MixtureTest, LiteralExpansionKeepsRecommendations) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = ExpandBehaviorProducts(g, {{Rational(1), {LrrBehavior(g)}}});
  const auto support = ProfileSupport(pi);
  ASSERT_EQ(support.size(), 2u);
  EXPECT_EQ(support[0].second[0], Pure(g, 0, "R0:L,B:R′"));
  EXPECT_EQ(support[1].second[0], Pure(g, 0, "R0:R,B:R′"));
}

TEST(MixtureTest, PureComponentsHaveKOne) {
  const Game g = LoadGame("ebos.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "ebos.pi.json");
  ASSERT_EQ(pi.components.size(), 2u);
  for (const auto& c : pi.components) {
    for (const auto& list : c.strategies) EXPECT_EQ(list.size(), 1u);
  }
  const auto support = ProfileSupport(pi);
  ASSERT_EQ(support.size(), 2u);
  EXPECT_EQ(support[0].first, Rational(1, 2));
  EXPECT_EQ(support[1].first, Rational(1, 2));
}

TEST(MixtureTest, ProductSupportExpansion) {
  const Game g = LoadGame("ebos.game.json");
  std::mt19937_64 rng(3);
  BehaviorStrategy b1 = RandomBehavior(g, 0, rng);
  b1.locals[0] = {Rational(1, 3), Rational(2, 3)};
  const BehaviorStrategy b2{1, {{Rational(1, 4), Rational(3, 4)}}};
  const MixtureOfProducts pi = MixtureFromBehaviorProducts(g, {{Rational(1), {b1, b2}}});
  const size_t k1 = pi.components[0].strategies[0].size();
  const auto support = ProfileSupport(pi);
  EXPECT_EQ(support.size(), k1 * 2);
  Rational total = 0;
  for (const auto& [w, x] : support) total += w;
  EXPECT_EQ(total, 1);
}

TEST(MixtureTest, DuplicatedComponentsAreAValidMixture) {
  const Game g = LoadGame("lrr.game.json");
  const MixtureOfProducts pi = MixtureFromBehaviorProducts(
      g, {{Rational(1, 2), {LrrBehavior(g)}}, {Rational(1, 2), {LrrBehavior(g)}}});
  EXPECT_NO_THROW(CheckMixture(g, pi));
  EXPECT_EQ(ProfileSupport(pi).size(), 4u);
}

TEST(MixtureTest, CheckRejectsBadWeights) {
  const Game g = LoadGame("lrr.game.json");
  MixtureOfProducts pi = LoadProfile(g, "lrr.pi_prime.json");
  pi.components[0].strategies[0][0].beta = Rational(1, 2);
  EXPECT_THROW(CheckMixture(g, pi), InvalidProfileError);
  pi = LoadProfile(g, "lrr.pi_prime.json");
  pi.components[0].alpha = Rational(1, 2);
  EXPECT_THROW(CheckMixture(g, pi), InvalidProfileError);
}

TEST(EnumerateTest, Counts) {
  const Game lrr = LoadGame("lrr.game.json");
  const auto x = AllPureStrategies(lrr, 0);
  ASSERT_EQ(x.size(), 4u);
  EXPECT_EQ(x[0], Pure(lrr, 0, "R0:L,B:L′"));
  EXPECT_EQ(x[1], Pure(lrr, 0, "R0:L,B:R′"));
  EXPECT_EQ(x[3], Pure(lrr, 0, "R0:R,B:R′"));
  for (size_t k = 0; k < x.size(); ++k) {
    EXPECT_EQ(PureStrategyIndex(lrr, x[k]), k);
    EXPECT_EQ(PureStrategyAt(lrr, 0, k), x[k]);
  }
  EXPECT_EQ(AllPureStrategies(LoadGame("ebos.game.json"), 1).size(), 2u);
  EXPECT_THROW(AllPureStrategies(LoadGame("ebos.game.json"), 0, 7), ResourceLimitError);
}

TEST(ProfileJsonTest, RoundTrip) {
  const Game g = LoadGame("ebos.game.json");
  const MixtureOfProducts pi = LoadProfile(g, "ebos.pi.json");
  const std::string text = SerializeProfile(g, pi);
  EXPECT_EQ(SerializeProfile(g, ParseProfile(g, text)), text);
}

TEST(ProfileJsonTest, Errors) {
  const Game g = LoadGame("lrr.game.json");
  EXPECT_THROW(ParseProfile(g, "{"), ParseError);
  EXPECT_THROW(ParseProfile(g, R"({"components":[{"alpha":"1","strategies":[[{"beta":"1",
      "actions":{"R0":"L"}}]]}]})"),
               InvalidProfileError);
  EXPECT_THROW(ParseProfile(g, R"({"components":[{"alpha":"1","strategies":[[{"beta":"1",
      "actions":{"R0":"Q","B":"L′"}}]]}]})"),
               InvalidProfileError);
}

}  // namespace
}  // namespace gtcorr
