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

#include "gtcorr/random_games.h"

#include <map>
#include <string>

namespace gtcorr {
namespace {

class Generator {
 public:
  Generator(std::mt19937_64& rng, const RandomGameOptions& options)
      : rng_(rng), options_(options) {}

  GameTree Run() {
    const int n = Uniform(options_.min_players, options_.max_players);
    for (int p = 0; p < n; ++p) tree_.players.push_back("P" + std::to_string(p + 1));
    infosets_.resize(n);
    budget_ = options_.max_nodes - 1;
    Build(-1, -1, std::vector<std::string>(n), 0);
    return std::move(tree_);
  }

 private:
  struct InfosetInfo {
    std::string id;
    std::string history;
    int num_actions;
  };

  int Uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool Percent(int p) { return Uniform(0, 99) < p; }

  Rational RandomPayoff() {
    Rational r(Uniform(-options_.max_payoff, options_.max_payoff),
               Uniform(1, options_.max_denominator));
    r.canonicalize();
    return r;
  }

  int Build(int parent, int action, const std::vector<std::string>& history, int depth) {
    const int h = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[h].parent = parent;
    tree_.nodes[h].parent_action = action;
    const bool stop = budget_ < 2 || (depth > 0 && Percent(15 + 15 * depth));
    if (stop) {
      Node& node = tree_.nodes[h];
      node.kind = NodeKind::kTerminal;
      for (size_t p = 0; p < tree_.players.size(); ++p) node.payoffs.push_back(RandomPayoff());
      return h;
    }
    const int widest = std::min(options_.max_actions, budget_);
    std::vector<std::string> child_history = history;
    std::vector<std::string> labels;
    if (Percent(options_.chance_percent)) {
      const int k = Uniform(2, widest);
      std::vector<int> weights(k);
      int total = 0;
      for (int& w : weights) total += (w = Uniform(1, 3));
      Node& node = tree_.nodes[h];
      node.kind = NodeKind::kChance;
      for (int a = 0; a < k; ++a) {
        labels.push_back("c" + std::to_string(a));
        Rational q(weights[a], total);
        q.canonicalize();
        node.probs.push_back(q);
      }
      node.labels = labels;
      budget_ -= k;
      for (int a = 0; a < k; ++a) {
        const int c = Build(h, a, history, depth + 1);
        tree_.nodes[h].children.push_back(c);
      }
      return h;
    }

    const int p = Uniform(0, static_cast<int>(tree_.players.size()) - 1);
    std::vector<int> compatible;
    for (size_t I = 0; I < infosets_[p].size(); ++I) {
      const InfosetInfo& info = infosets_[p][I];
      if (info.history == history[p] && info.num_actions <= widest) compatible.push_back(I);
    }
    int I;
    if (!compatible.empty() && Percent(options_.merge_percent)) {
      I = compatible[Uniform(0, static_cast<int>(compatible.size()) - 1)];
    } else {
      I = static_cast<int>(infosets_[p].size());
      infosets_[p].push_back({tree_.players[p] + "." + std::to_string(I), history[p],
                              Uniform(2, std::max(2, widest))});
    }
    const InfosetInfo& info = infosets_[p][I];
    const int k = info.num_actions;
    for (int a = 0; a < k; ++a) labels.push_back(std::string(1, static_cast<char>('a' + a)) + std::to_string(I));
    Node& node = tree_.nodes[h];
    node.kind = NodeKind::kDecision;
    node.player = p;
    node.infoset = info.id;
    node.labels = labels;
    const std::string own = info.id;
    budget_ -= k;
    for (int a = 0; a < k; ++a) {
      child_history[p] = history[p] + "/" + own + ":" + labels[a];
      const int c = Build(h, a, child_history, depth + 1);
      tree_.nodes[h].children.push_back(c);
    }
    return h;
  }

  std::mt19937_64& rng_;
  RandomGameOptions options_;
  GameTree tree_;
  std::vector<std::vector<InfosetInfo>> infosets_;
  int budget_ = 0;
};

}  // namespace

Game RandomGame(std::mt19937_64& rng, const RandomGameOptions& options) {
  return Game::FromTree(Generator(rng, options).Run());
}

Rational RandomUnitRational(std::mt19937_64& rng, int max_denominator) {
  const int q = std::uniform_int_distribution<int>(1, max_denominator)(rng);
  Rational r(std::uniform_int_distribution<int>(0, q)(rng), q);
  r.canonicalize();
  return r;
}

BehaviorStrategy RandomBehaviorStrategy(const Game& game, int player, std::mt19937_64& rng,
                                        int max_weight) {
  BehaviorStrategy b{player, {}};
  std::uniform_int_distribution<int> w(0, max_weight);
  for (int I = 0; I < game.num_infosets(player); ++I) {
    std::vector<int> raw(game.num_actions(player, I));
    int total = 0;
    for (int& r : raw) total += (r = w(rng));
    if (total == 0) raw[0] = total = 1;
    std::vector<Rational> local;
    for (int r : raw) {
      local.emplace_back(r, total);
      local.back().canonicalize();
    }
    b.locals.push_back(std::move(local));
  }
  return b;
}

MixtureOfProducts RandomProfile(const Game& game, std::mt19937_64& rng, int components) {
  std::vector<int> weights(components);
  int total = 0;
  for (int& w : weights) total += (w = std::uniform_int_distribution<int>(1, 3)(rng));
  std::vector<BehaviorComponent> parts;
  for (int t = 0; t < components; ++t) {
    BehaviorComponent c;
    c.alpha = Rational(weights[t], total);
    c.alpha.canonicalize();
    for (int p = 0; p < game.num_players(); ++p) {
      c.behaviors.push_back(RandomBehaviorStrategy(game, p, rng));
    }
    parts.push_back(std::move(c));
  }
  return ExpandBehaviorProducts(game, parts);
}

}  // namespace gtcorr
