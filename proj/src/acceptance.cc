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

#include "gtcorr/acceptance.h"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "gtcorr/convert.h"
#include "gtcorr/equilibrium.h"
#include "gtcorr/errors.h"
#include "gtcorr/fixtures.h"
#include "gtcorr/game_json.h"
#include "gtcorr/metrics.h"
#include "gtcorr/oracles.h"
#include "gtcorr/profile_json.h"
#include "gtcorr/random_games.h"
#include "gtcorr/strategy.h"

namespace gtcorr {
namespace {

constexpr GapNotion kNotions[] = {GapNotion::kEfce, GapNotion::kBce, GapNotion::kFullEfce,
                                  GapNotion::kNfcce};
constexpr size_t kMaxFailures = 5;

class Checker {
 public:
  explicit Checker(CriterionResult& r) : r_(r) {}

  bool Check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failed_;
      if (r_.failures.size() < kMaxFailures) r_.failures.push_back(what);
    }
    return ok;
  }
  bool Equal(const Rational& got, const Rational& want, const std::string& what) {
    return Check(got == want, what + ": got " + ToString(got) + ", want " + ToString(want));
  }
  int checks() const { return checks_; }
  int failed() const { return failed_; }

 private:
  CriterionResult& r_;
  int checks_ = 0;
  int failed_ = 0;
};

Game Fixture(const char* name) { return ParseGame(FixtureText(name)); }
MixtureOfProducts FixtureProfile(const Game& g, const char* name, bool expand = false) {
  return ParseProfile(g, FixtureText(name), expand);
}

PureStrategy Named(const Game& g, int player, std::initializer_list<std::pair<const char*, const char*>> actions) {
  PureStrategy x = FirstPureStrategy(g, player);
  for (const auto& [infoset, label] : actions) {
    const int I = g.FindInfoset(player, infoset);
    x.actions[I] = g.FindAction(player, I, label);
  }
  return x;
}

std::vector<Game> RandomGames(std::uint64_t seed, int count, const RandomGameOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Game> games;
  for (int k = 0; k < count; ++k) games.push_back(RandomGame(rng, options));
  return games;
}

// Mixes a random pure profile into pi with weight delta.
MixtureOfProducts Perturb(const Game& g, const MixtureOfProducts& pi, const Rational& delta,
                          std::mt19937_64& rng) {
  MixtureOfProducts out = pi;
  for (auto& c : out.components) c.alpha *= 1 - delta;
  MixtureOfProducts::Component extra;
  extra.alpha = delta;
  for (int i = 0; i < g.num_players(); ++i) {
    const unsigned long long n = NumPureStrategies(g, i);
    const size_t k = std::uniform_int_distribution<unsigned long long>(0, n - 1)(rng);
    extra.strategies.push_back({WeightedStrategy{Rational(1), PureStrategyAt(g, i, k)}});
  }
  out.components.push_back(std::move(extra));
  return out;
}

void EbosCriterion(Checker& c, CriterionResult& r) {
  const Game g = Fixture("ebos.game.json");
  const MixtureOfProducts pi = FixtureProfile(g, "ebos.pi.json");
  c.Equal(ExpectedUtility(g, pi, 0), Rational(3, 2), "EU player 1");
  c.Equal(ExpectedUtility(g, pi, 1), Rational(3, 2), "EU player 2");
  c.Equal(ComputeGap(g, pi, GapNotion::kEfce).gap, 0, "efce gap of pi");
  const GapReport bce = ComputeGap(g, pi, GapNotion::kBce);
  c.Equal(bce.gap, 1, "bce gap of pi");
  c.Equal(BruteForceGap(g, pi, GapNotion::kBce).report.gap, 1, "oracle bce gap of pi");
  const MixtureOfProducts converted = EfceToBce(g, pi);
  const MixtureOfProducts reference = FixtureProfile(g, "ebos.pi_prime.json");
  c.Check(ProfileSupport(converted) == ProfileSupport(reference), "efce_to_bce(pi) = reference pi'");
  c.Equal(ComputeGap(g, converted, GapNotion::kBce).gap, 0, "bce gap of pi'");
  c.Check(OutcomeEquivalent(g, pi, converted), "pi ~ pi' in outcomes");
  r.detail = "EU 3/2,3/2; efce gap 0; bce gap 1; pi' = reference mix; bce gap(pi') 0";
}

void LrrCriterion(Checker& c, CriterionResult& r) {
  const Game g = Fixture("lrr.game.json");
  const MixtureOfProducts literal = FixtureProfile(g, "lrr.pi.behavior.json", true);
  c.Equal(ComputeGap(g, literal, GapNotion::kEfce).gap, Rational(1, 5), "efce gap of pi");
  c.Equal(ComputeGap(g, literal, GapNotion::kBce).gap, 1, "bce gap of pi");
  const MixtureOfProducts decomposed = FixtureProfile(g, "lrr.pi.behavior.json");
  const MixtureOfProducts converted = EfceToBce(g, decomposed);
  const auto support = ProfileSupport(converted);
  const bool shape = support.size() == 2 && support[0].first == Rational(9, 10) &&
                     support[0].second[0] == Named(g, 0, {{"R0", "L"}, {"B", "L′"}}) &&
                     support[1].first == Rational(1, 10) &&
                     support[1].second[0] == Named(g, 0, {{"R0", "R"}, {"B", "R′"}});
  c.Check(shape, "efce_to_bce(decompose(pi)) = 9/10 (L,L′) + 1/10 (R,R′)");
  // The criterion's 1/10 is the per-infoset gap at B; the root infoset
  // contributes 1/5 (see the decisions log). The bound is what matters.
  const GapReport bce = ComputeGap(g, converted, GapNotion::kBce);
  c.Equal(bce.per_infoset[0][g.FindInfoset(0, "B")], Rational(1, 10), "bce gap of pi' at B");
  c.Equal(bce.gap, Rational(1, 5), "bce gap of pi'");
  c.Check(bce.gap <= ComputeGap(g, literal, GapNotion::kEfce).gap, "gap(pi', bce) <= gap(pi, efce)");
  c.Check(OutcomeEquivalent(g, literal, converted), "outcomes preserved");
  r.detail = "efce gap 1/5; bce gap 1; pi' = 9/10 (L,L′) + 1/10 (R,R′); bce gap(pi') 1/5 (B: 1/10) <= 1/5";
}

void ConversionCriterion(Checker& c, CriterionResult& r, const std::vector<Game>& games,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x3);
  int perturbed_positive = 0;
  for (size_t k = 0; k < games.size(); ++k) {
    const Game& g = games[k];
    const std::string tag = "game " + std::to_string(k);
    std::vector<Rational> objective;
    for (int z = 0; z < g.num_terminals(); ++z) objective.push_back(RandomUnitRational(rng));
    for (const EquilibriumResult& e : {ComputeEfce(g), OptimalEfce(g, objective)}) {
      const MixtureOfProducts converted = EfceToBce(g, e.profile);
      c.Check(OutcomeEquivalent(g, e.profile, converted), tag + ": outcome-equivalent");
      c.Equal(ComputeGap(g, converted, GapNotion::kBce).gap, 0, tag + ": bce gap after conversion");
    }
    const MixtureOfProducts noisy = Perturb(g, ComputeEfce(g).profile, Rational(1, 10), rng);
    const Rational eps = ComputeGap(g, noisy, GapNotion::kEfce).gap;
    perturbed_positive += eps > 0;
    const Rational after = ComputeGap(g, EfceToBce(g, noisy), GapNotion::kBce).gap;
    c.Check(after <= eps, tag + ": perturbed bce gap " + ToString(after) + " > efce gap " + ToString(eps));
  }
  r.detail = std::to_string(games.size()) + " games x 2 EFCEs converted to exact BCEs; " +
             std::to_string(games.size()) + " perturbed profiles (" +
             std::to_string(perturbed_positive) + " with eps > 0) keep gap(pi', bce) <= gap(pi, efce)";
}

void OracleCriterion(Checker& c, CriterionResult& r, const AcceptanceOptions& options) {
  auto agree = [&](const Game& g, const MixtureOfProducts& pi, const std::string& tag) {
    for (GapNotion n : kNotions) {
      const GapReport dp = ComputeGap(g, pi, n);
      const OracleReport oracle = BruteForceGap(g, pi, n);
      c.Check(dp.per_player == oracle.report.per_player,
              tag + " " + std::string(GapNotionName(n)) + ": dp " + ToString(dp.gap) + " vs oracle " +
                  ToString(oracle.report.gap));
    }
  };
  const Game lrr = Fixture("lrr.game.json");
  agree(lrr, FixtureProfile(lrr, "lrr.pi.behavior.json", true), "lrr pi");
  agree(lrr, FixtureProfile(lrr, "lrr.pi_prime.json"), "lrr pi'");
  agree(lrr, FixtureProfile(lrr, "lrr.pure_lr.json"), "lrr (L,R′)");
  const Game ebos = Fixture("ebos.game.json");
  agree(ebos, FixtureProfile(ebos, "ebos.pi.json"), "ebos pi");
  agree(ebos, FixtureProfile(ebos, "ebos.pi_prime.json"), "ebos pi'");
  std::mt19937_64 rng(options.seed ^ 0x4);
  RandomGameOptions tiny;
  tiny.max_nodes = 10;
  int feasible = 0, attempts = 0;
  while (feasible < options.oracle_games && attempts < 20 * options.oracle_games) {
    ++attempts;
    const Game g = RandomGame(rng, tiny);
    const MixtureOfProducts pi = RandomProfile(g, rng, 2);
    try {
      for (GapNotion n : kNotions) BruteForceGap(g, pi, n);
    } catch (const ResourceLimitError&) {
      continue;
    }
    agree(g, pi, "random game " + std::to_string(attempts));
    ++feasible;
  }
  c.Check(feasible >= options.oracle_games, "only " + std::to_string(feasible) + " feasible random games");
  r.detail = "fixtures + " + std::to_string(feasible) + " random tiny games (" +
             std::to_string(attempts) + " drawn), 4 notions each";
}

void DecomposeCriterion(Checker& c, CriterionResult& r, const AcceptanceOptions& options) {
  std::mt19937_64 rng(options.seed ^ 0x5);
  int cases = 0;
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    const Game g = Fixture(name);
    for (int i = 0; i < g.num_players(); ++i) {
      for (int k = 0; k < options.decompositions; ++k) {
        const SequenceFormVector v = SequenceForm(g, RandomBehaviorStrategy(g, i, rng, 4));
        const auto terms = Decompose(g, v);
        std::vector<Rational> sum(v.reach.size(), Rational(0));
        for (const auto& [beta, x] : terms) {
          const SequenceFormVector xv = SequenceForm(g, x);
          for (size_t s = 0; s < sum.size(); ++s) sum[s] += beta * xv.reach[s];
        }
        c.Check(sum == v.reach, std::string(name) + ": reconstruction");
        c.Check(terms.size() <= static_cast<size_t>(g.num_sequences(i)), std::string(name) + ": K <= |Sigma_i|");
        ++cases;
      }
    }
  }
  r.detail = std::to_string(cases) + " random behavior strategies reconstructed exactly, K <= |Sigma_i|";
}

void BceCriterion(Checker& c, CriterionResult& r, const std::vector<Game>& games) {
  for (const char* name : {"ebos.game.json", "lrr.game.json", "surj.game.json"}) {
    const Game g = Fixture(name);
    c.Equal(ComputeGap(g, ComputeBce(g).profile, GapNotion::kBce).gap, 0, name);
  }
  for (size_t k = 0; k < games.size(); ++k) {
    c.Equal(ComputeGap(games[k], ComputeBce(games[k]).profile, GapNotion::kBce).gap, 0,
            "game " + std::to_string(k));
  }
  r.detail = "3 fixtures + " + std::to_string(games.size()) + " random games: bce gap 0";
}

void OptimalCriterion(Checker& c, CriterionResult& r, const AcceptanceOptions& options) {
  auto same = [&](const Game& g, const std::vector<Rational>& obj, const std::string& tag) {
    const Rational efce = OptimalEfce(g, obj).objective_value;
    const Rational bce = OptimalBce(g, obj).objective_value;
    c.Equal(bce, efce, tag + ": optimal bce value");
    return efce;
  };
  const Game ebos = Fixture("ebos.game.json");
  c.Equal(same(ebos, ParseObjective(ebos, FixtureText("ebos.welfare.json")), "ebos welfare"), 5,
          "ebos optimal welfare");
  const Game lrr = Fixture("lrr.game.json");
  c.Equal(same(lrr, ParseObjective(lrr, FixtureText("lrr.u1.json")), "lrr u1"), 2, "lrr optimal u1");
  const Game surj = Fixture("surj.game.json");
  std::vector<Rational> welfare(surj.num_terminals());
  for (int z = 0; z < surj.num_terminals(); ++z) welfare[z] = surj.payoff(z, 0) + surj.payoff(z, 1);
  same(surj, welfare, "surj welfare");
  std::mt19937_64 rng(options.seed ^ 0x7);
  for (int k = 0; k < options.optimal_pairs; ++k) {
    const Game g = RandomGame(rng);
    std::vector<Rational> obj;
    for (int z = 0; z < g.num_terminals(); ++z) {
      Rational q(std::uniform_int_distribution<int>(-6, 6)(rng), std::uniform_int_distribution<int>(1, 5)(rng));
      q.canonicalize();
      obj.push_back(q);
    }
    same(g, obj, "random pair " + std::to_string(k));
  }
  r.detail = "3 fixtures (ebos welfare 5, lrr u1 2) + " + std::to_string(options.optimal_pairs) +
             " random pairs: optimal efce value = optimal bce value";
}

void SurjCriterion(Checker& c, CriterionResult& r) {
  const Game g = Fixture("surj.game.json");
  const MixtureOfProducts pi = FixtureProfile(g, "surj.bce.json");
  const int S = g.FindInfoset(1, "S");
  c.Equal(ComputeGap(g, pi, GapNotion::kBce).gap, 0, "bce gap of the reference distribution");
  c.Equal(ConditionalSubtreeUtility(g, pi, 0, 1, S), 1, "P1 utility in S");
  const MixtureOfProducts converted = EfceToBce(g, pi);
  c.Check(ProfileSupport(converted) != ProfileSupport(pi), "conversion changes the profile");
  c.Check(OutcomeEquivalent(g, pi, converted), "converted profile is outcome-equivalent");
  c.Equal(ComputeGap(g, converted, GapNotion::kBce).gap, 0, "bce gap after conversion");
  c.Equal(ConditionalSubtreeUtility(g, converted, 0, 1, S), Rational(1, 2), "P1 utility in S after");
  r.detail = "reference BCE: gap 0, utility in S 1; image: different, outcome-equivalent, gap 0, utility in S 1/2";
}

void CounterexampleCriterion(Checker& c, CriterionResult& r) {
  const Game g = Fixture("lrr.game.json");
  const MixtureOfProducts base = FixtureProfile(g, "lrr.pure_lr.json");
  const int B = g.FindInfoset(0, "B");
  c.Equal(CounterfactualUtility(g, base, 0, B), 0, "counterfactual utility at B");
  c.Equal(ComputeGap(g, base, GapNotion::kEfce).gap, 0, "(L,R′) is an EFCE");
  // Candidates: every distribution over X_1 with weights in sixths, and
  // every behavior strategy with local probabilities in thirds and halves.
  std::vector<MixtureOfProducts> family;
  const std::vector<PureStrategy> xs = AllPureStrategies(g, 0);
  for (int a = 0; a <= 6; ++a) {
    for (int b = 0; a + b <= 6; ++b) {
      for (int d = 0; a + b + d <= 6; ++d) {
        const int e = 6 - a - b - d;
        std::vector<std::pair<Rational, PureProfile>> support;
        const int w[] = {a, b, d, e};
        for (int k = 0; k < 4; ++k) {
          if (w[k] == 0) continue;
          Rational q(w[k], 6);
          q.canonicalize();
          support.emplace_back(q, PureProfile{xs[k]});
        }
        family.push_back(MixtureFromPureProfiles(support));
      }
    }
  }
  const Rational grid[] = {0, Rational(1, 3), Rational(1, 2), Rational(2, 3), 1};
  for (const Rational& p : grid) {
    for (const Rational& q : grid) {
      BehaviorStrategy b{0, {{p, 1 - p}, {q, 1 - q}}};
      family.push_back(ExpandBehaviorProducts(g, {{Rational(1), {b}}}));
    }
  }
  int equivalent = 0;
  for (const MixtureOfProducts& pi : family) {
    if (!CounterfactuallyOutcomeEquivalent(g, base, pi)) continue;
    ++equivalent;
    c.Check(ComputeGap(g, pi, GapNotion::kBce).gap >= 1, "cf-equivalent candidate with bce gap < 1");
  }
  c.Check(equivalent > 0, "family contains (L,R′) itself");
  // The outcome-equivalent (L,L′) is a BCE, so only the stronger notion fails.
  const MixtureOfProducts ll = MixtureFromPureProfiles({{1, {Named(g, 0, {{"R0", "L"}, {"B", "L′"}})}}});
  c.Check(OutcomeEquivalent(g, base, ll), "(L,L′) ~ (L,R′) in outcomes");
  c.Equal(ComputeGap(g, ll, GapNotion::kBce).gap, 0, "(L,L′) is a BCE");
  r.detail = std::to_string(family.size()) + " candidates, " + std::to_string(equivalent) +
             " cf-equivalent to (L,R′), all with bce gap >= 1; cf utility at B 0";
}

void ReachCriterion(Checker& c, CriterionResult& r, const std::vector<Game>& games,
                    std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xa);
  int checked = 0;
  auto compare = [&](const Game& g, const MixtureOfProducts& pi, const std::string& tag) {
    for (int i = 0; i < g.num_players(); ++i) {
      for (int s = 0; s < g.num_sequences(i); ++s) {
        const ConditionalReach a = ComputeConditionalReach(g, pi, i, s);
        const ConditionalReach b = ExpandedConditionalReach(g, pi, i, s);
        c.Check(a.event_mass == b.event_mass && a.reach == b.reach, tag + ": player " +
                                                                       std::to_string(i) + " sequence " + std::to_string(s));
        ++checked;
      }
    }
  };
  const Game ebos = Fixture("ebos.game.json");
  compare(ebos, FixtureProfile(ebos, "ebos.pi.json"), "ebos pi");
  compare(ebos, FixtureProfile(ebos, "ebos.pi_prime.json"), "ebos pi'");
  const Game lrr = Fixture("lrr.game.json");
  compare(lrr, FixtureProfile(lrr, "lrr.pi.behavior.json"), "lrr pi");
  compare(lrr, FixtureProfile(lrr, "lrr.pi.behavior.json", true), "lrr pi literal");
  compare(lrr, FixtureProfile(lrr, "lrr.pi_prime.json"), "lrr pi'");
  const Game surj = Fixture("surj.game.json");
  compare(surj, FixtureProfile(surj, "surj.bce.json"), "surj");
  for (size_t k = 0; k < games.size(); ++k) {
    compare(games[k], RandomProfile(games[k], rng, 3), "game " + std::to_string(k));
  }
  r.detail = std::to_string(checked) + " (profile, player, sequence) triples on fixtures + " +
             std::to_string(games.size()) + " random games";
}

}  // namespace

std::vector<CriterionResult> RunAcceptanceSuite(const AcceptanceOptions& options,
                                                std::ostream* out) {
  const std::vector<Game> games = RandomGames(options.seed, options.random_games, {});
  struct CriterionDef {
    int id;
    const char* title;
    double limit;
    std::function<void(Checker&, CriterionResult&)> run;
  };
  const std::vector<CriterionDef> defs = {
      {1, "EBOS fixture", 5, EbosCriterion},
      {2, "LRR fixture", 5, LrrCriterion},
      {3, "EFCE-to-BCE conversion on random games", 180,
       [&](Checker& c, CriterionResult& r) { ConversionCriterion(c, r, games, options.seed); }},
      {4, "oracle agreement", 60, [&](Checker& c, CriterionResult& r) { OracleCriterion(c, r, options); }},
      {5, "sequence-form decomposition", 30,
       [&](Checker& c, CriterionResult& r) { DecomposeCriterion(c, r, options); }},
      {6, "exact BCE computation", 300, [&](Checker& c, CriterionResult& r) { BceCriterion(c, r, games); }},
      {7, "optimal EFCE = optimal BCE", 300,
       [&](Checker& c, CriterionResult& r) { OptimalCriterion(c, r, options); }},
      {8, "SURJ non-surjectivity", 300, SurjCriterion},
      {9, "counterfactual-equivalence counterexample", 300, CounterexampleCriterion},
      {10, "factorized vs expanded conditional reach", 300,
       [&](Checker& c, CriterionResult& r) { ReachCriterion(c, r, games, options.seed); }},
  };
  std::vector<CriterionResult> results;
  for (const CriterionDef& def : defs) {
    CriterionResult r;
    r.id = def.id;
    r.title = def.title;
    r.limit_seconds = def.limit;
    Checker checker(r);
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(checker, r);
    } catch (const std::exception& e) {
      checker.Check(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    checker.Check(r.seconds <= r.limit_seconds, "over the time limit");
    r.passed = checker.failed() == 0;
    if (out) *out << FormatCriterion(r) << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

std::string FormatCriterion(const CriterionResult& r) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.title << " (" << r.seconds
    << " s, limit " << r.limit_seconds << " s)";
  if (!r.detail.empty()) s << " - " << r.detail;
  for (const std::string& f : r.failures) s << "\n      " << f;
  return s.str();
}

}  // namespace gtcorr
