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

#include "gtcorr/game.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "gtcorr/errors.h"

namespace gtcorr {
namespace {

using OwnHistory = std::vector<std::pair<std::string, std::string>>;

// Own (infoset, action) pairs of `player` on the path to h, top-down.
OwnHistory OwnHistoryOf(const GameTree& tree, int h, int player) {
  OwnHistory out;
  int child = h;
  int cur = tree.nodes[h].parent;
  while (cur >= 0) {
    const Node& n = tree.nodes[cur];
    if (n.kind == NodeKind::kDecision && n.player == player) {
      const int a = tree.nodes[child].parent_action;
      out.emplace_back(n.infoset, n.labels[a]);
    }
    child = cur;
    cur = n.parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string FormatHistory(const OwnHistory& h) {
  if (h.empty()) return "∅";
  std::string s;
  for (const auto& [I, a] : h) {
    if (!s.empty()) s += ",";
    s += I + ":" + a;
  }
  return s;
}

}  // namespace

std::string GameTree::NodeLocation(int node) const {
  std::vector<int> path;
  for (int h = node; nodes[h].parent >= 0; h = nodes[h].parent) {
    path.push_back(nodes[h].parent_action);
  }
  std::string out = "/root";
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    out += "/actions/" + std::to_string(*it) + "/child";
  }
  return out;
}

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kPerfectRecall:
      return "perfect-recall";
    case ViolationKind::kChanceSum:
      return "chance-sum";
    case ViolationKind::kInfosetActionMismatch:
      return "infoset-action-mismatch";
    case ViolationKind::kTreeShape:
      return "tree-shape";
  }
  return "unknown";
}

ValidationReport Validate(const GameTree& tree) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::string location, std::string message) {
    report.violations.push_back({kind, std::move(location), std::move(message)});
  };
  const int n = static_cast<int>(tree.players.size());
  if (n < 1) add(ViolationKind::kTreeShape, "/players", "game needs at least one player");
  if (tree.nodes.empty()) {
    add(ViolationKind::kTreeShape, "/root", "game has no nodes");
    report.ok = false;
    return report;
  }

  std::map<std::string, std::vector<int>> members;
  for (int h = 0; h < static_cast<int>(tree.nodes.size()); ++h) {
    const Node& node = tree.nodes[h];
    const std::string where = tree.NodeLocation(h);
    if (node.kind == NodeKind::kTerminal) {
      if (static_cast<int>(node.payoffs.size()) != n) {
        add(ViolationKind::kTreeShape, where, "payoff vector length differs from player count");
      }
      continue;
    }
    if (node.children.empty()) {
      add(ViolationKind::kTreeShape, where, "non-terminal node has no actions");
    }
    if (node.labels.size() != node.children.size()) {
      add(ViolationKind::kTreeShape, where, "action labels and children differ in count");
    }
    std::set<std::string> seen(node.labels.begin(), node.labels.end());
    if (seen.size() != node.labels.size()) {
      add(ViolationKind::kTreeShape, where, "duplicate action label");
    }
    for (int c : node.children) {
      if (c <= h || c >= static_cast<int>(tree.nodes.size()) || tree.nodes[c].parent != h) {
        add(ViolationKind::kTreeShape, where, "child links do not form a tree");
        break;
      }
    }
    if (node.kind == NodeKind::kChance) {
      Rational sum = 0;
      bool negative = false;
      for (const Rational& p : node.probs) {
        sum += p;
        negative = negative || p < 0;
      }
      if (node.probs.size() != node.children.size()) {
        add(ViolationKind::kChanceSum, where, "missing chance probabilities");
      } else if (negative) {
        add(ViolationKind::kChanceSum, where, "negative chance probability");
      } else if (sum != 1) {
        add(ViolationKind::kChanceSum, where,
            "chance probabilities sum to " + ToString(sum) + ", not 1");
      }
    } else {
      if (node.player < 0 || node.player >= n) {
        add(ViolationKind::kTreeShape, where, "player index out of range");
        continue;
      }
      if (node.infoset.empty()) {
        add(ViolationKind::kTreeShape, where, "decision node without infoset id");
        continue;
      }
      members[node.infoset].push_back(h);
    }
  }

  for (const auto& [id, hs] : members) {
    const Node& first = tree.nodes[hs.front()];
    const OwnHistory first_history = OwnHistoryOf(tree, hs.front(), first.player);
    for (size_t k = 1; k < hs.size(); ++k) {
      const Node& other = tree.nodes[hs[k]];
      const std::string where = tree.NodeLocation(hs[k]);
      if (other.player != first.player) {
        add(ViolationKind::kTreeShape, where,
            "infoset \"" + id + "\" is shared by more than one player");
        continue;
      }
      if (other.labels != first.labels) {
        add(ViolationKind::kInfosetActionMismatch, where,
            "infoset \"" + id + "\" member lists different actions than its first member");
      }
      const OwnHistory h = OwnHistoryOf(tree, hs[k], other.player);
      if (h != first_history) {
        add(ViolationKind::kPerfectRecall, where,
            "infoset \"" + id + "\" member has own history " + FormatHistory(h) +
                " but first member has " + FormatHistory(first_history));
      }
    }
  }
  report.ok = report.violations.empty();
  return report;
}

Game Game::FromTree(GameTree tree) {
  ValidationReport report = Validate(tree);
  if (!report.ok) {
    std::string msg = "invalid game:";
    for (const Violation& v : report.violations) {
      msg += " [" + std::string(ViolationKindName(v.kind)) + " at " + v.location + ": " +
             v.message + "]";
    }
    throw GameError(msg);
  }
  Game game;
  game.tree_ = std::move(tree);
  game.Build();
  return game;
}

void Game::Build() {
  const int n = num_players();
  const int num = num_nodes();
  terminal_index_.assign(num, -1);
  node_infoset_.assign(num, -1);
  node_sequence_.assign(num, std::vector<int>(n, 0));
  infosets_.assign(n, {});
  sequences_.assign(n, {Sequence{}});
  child_infosets_.assign(n, {{}});
  terminals_at_.assign(n, {{}});

  std::vector<std::map<std::string, int, std::less<>>> by_id(n);
  std::vector<Rational> reach(num, Rational(1));
  std::vector<std::string> path_label(num);

  // Preorder storage means parents are processed before children.
  for (int h = 0; h < num; ++h) {
    const Node& node = tree_.nodes[h];
    if (node.parent >= 0) {
      const Node& parent = tree_.nodes[node.parent];
      node_sequence_[h] = node_sequence_[node.parent];
      reach[h] = reach[node.parent];
      if (parent.kind == NodeKind::kChance) reach[h] *= parent.probs[node.parent_action];
      if (parent.kind == NodeKind::kDecision) {
        const int I = node_infoset_[node.parent];
        node_sequence_[h][parent.player] = SequenceOf(parent.player, I, node.parent_action);
      }
      path_label[h] = path_label[node.parent].empty()
                          ? parent.labels[node.parent_action]
                          : path_label[node.parent] + "," + parent.labels[node.parent_action];
    }
    if (node.kind == NodeKind::kDecision) {
      const int p = node.player;
      auto it = by_id[p].find(node.infoset);
      int I;
      if (it == by_id[p].end()) {
        I = static_cast<int>(infosets_[p].size());
        by_id[p].emplace(node.infoset, I);
        Infoset info;
        info.id = node.infoset;
        info.player = p;
        info.labels = node.labels;
        info.parent_sequence = node_sequence_[h][p];
        const Sequence& ps = sequences_[p][info.parent_sequence];
        info.depth = ps.empty() ? 0 : infosets_[p][ps.infoset].depth + 1;
        info.first_sequence = static_cast<int>(sequences_[p].size());
        info.lex_order.resize(node.labels.size());
        for (size_t a = 0; a < node.labels.size(); ++a) info.lex_order[a] = static_cast<int>(a);
        std::stable_sort(info.lex_order.begin(), info.lex_order.end(),
                         [&](int a, int b) { return node.labels[a] < node.labels[b]; });
        for (size_t a = 0; a < node.labels.size(); ++a) {
          sequences_[p].push_back(Sequence{I, static_cast<int>(a)});
          child_infosets_[p].emplace_back();
          terminals_at_[p].emplace_back();
        }
        child_infosets_[p][info.parent_sequence].push_back(I);
        infosets_[p].push_back(std::move(info));
      } else {
        I = it->second;
      }
      node_infoset_[h] = I;
      infosets_[p][I].nodes.push_back(h);
    } else if (node.kind == NodeKind::kTerminal) {
      const int z = static_cast<int>(terminal_nodes_.size());
      terminal_index_[h] = z;
      terminal_nodes_.push_back(h);
      terminal_ids_.push_back("(" + path_label[h] + ")");
      chance_reach_.push_back(reach[h]);
      for (int p = 0; p < n; ++p) terminals_at_[p][node_sequence_[h][p]].push_back(z);
    }
  }

  chains_.assign(n, {});
  terminals_below_.assign(n, {});
  for (int p = 0; p < n; ++p) {
    const int ni = num_infosets(p);
    chains_[p].resize(ni);
    for (int I = 0; I < ni; ++I) {
      const Sequence& ps = sequences_[p][infosets_[p][I].parent_sequence];
      if (!ps.empty()) chains_[p][I] = chains_[p][ps.infoset];
      chains_[p][I].push_back(I);
    }
    terminals_below_[p].resize(ni);
    for (int I = ni - 1; I >= 0; --I) {
      std::vector<int>& below = terminals_below_[p][I];
      for (int a = 0; a < num_actions(p, I); ++a) {
        const int s = SequenceOf(p, I, a);
        below.insert(below.end(), terminals_at_[p][s].begin(), terminals_at_[p][s].end());
        for (int J : child_infosets_[p][s]) {
          below.insert(below.end(), terminals_below_[p][J].begin(), terminals_below_[p][J].end());
        }
      }
      std::sort(below.begin(), below.end());
    }
  }
}

int Game::ParentSequence(int player, int s) const {
  const Sequence& seq = sequences_[player][s];
  if (seq.empty()) return -1;
  return infosets_[player][seq.infoset].parent_sequence;
}

bool Game::SequencePrecedes(int player, int s, int t) const {
  for (int cur = t; cur >= 0; cur = ParentSequence(player, cur)) {
    if (cur == s) return true;
  }
  return false;
}

bool Game::InfosetPrecedes(int player, int I, int J) const {
  const std::vector<int>& chain = chains_[player][J];
  return std::find(chain.begin(), chain.end(), I) != chain.end();
}

bool Game::SequencePrecedesInfoset(int player, int s, int I) const {
  return SequencePrecedes(player, s, infosets_[player][I].parent_sequence);
}

bool Game::InfosetPrecedesNode(int player, int I, int h) const {
  for (int cur = h; cur >= 0; cur = tree_.nodes[cur].parent) {
    const Node& n = tree_.nodes[cur];
    if (n.kind == NodeKind::kDecision && n.player == player && node_infoset_[cur] == I) {
      return true;
    }
  }
  return false;
}

bool Game::NodePrecedes(int h, int g) const {
  for (int cur = g; cur >= 0; cur = tree_.nodes[cur].parent) {
    if (cur == h) return true;
  }
  return false;
}

int Game::FindTerminal(std::string_view id) const {
  for (int z = 0; z < num_terminals(); ++z) {
    if (terminal_ids_[z] == id) return z;
  }
  return -1;
}

int Game::FindPlayer(std::string_view name_or_index) const {
  for (int p = 0; p < num_players(); ++p) {
    if (tree_.players[p] == name_or_index) return p;
  }
  int index = -1;
  const char* end = name_or_index.data() + name_or_index.size();
  auto [ptr, ec] = std::from_chars(name_or_index.data(), end, index);
  // Numeric indices are 1-based, as players are numbered in the literature.
  if (ec == std::errc() && ptr == end && index >= 1 && index <= num_players()) return index - 1;
  throw GameError("unknown player \"" + std::string(name_or_index) + "\"");
}

int Game::FindInfoset(int player, std::string_view id) const {
  for (int I = 0; I < num_infosets(player); ++I) {
    if (infosets_[player][I].id == id) return I;
  }
  return -1;
}

int Game::FindAction(int player, int I, std::string_view label) const {
  const auto& labels = infosets_[player][I].labels;
  for (int a = 0; a < static_cast<int>(labels.size()); ++a) {
    if (labels[a] == label) return a;
  }
  return -1;
}

int Game::ParseSequence(int player, std::string_view text) const {
  if (text.empty() || text == "∅") return 0;
  // Infoset ids may contain ':', so split at the last one.
  const size_t colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw GameError("sequence must be \"infoset:action\" or \"∅\", got \"" + std::string(text) +
                    "\"");
  }
  const int I = FindInfoset(player, text.substr(0, colon));
  if (I < 0) {
    throw GameError("unknown infoset \"" + std::string(text.substr(0, colon)) + "\" of player " +
                    tree_.players[player]);
  }
  const int a = FindAction(player, I, text.substr(colon + 1));
  if (a < 0) {
    throw GameError("unknown action \"" + std::string(text.substr(colon + 1)) + "\" at infoset " +
                    infosets_[player][I].id);
  }
  return SequenceOf(player, I, a);
}

std::string Game::SequenceName(int player, int s) const {
  const Sequence& seq = sequences_[player][s];
  if (seq.empty()) return "∅";
  const Infoset& info = infosets_[player][seq.infoset];
  return info.id + ":" + info.labels[seq.action];
}

unsigned long long Game::RecommendationStateCount(int player) const {
  constexpr unsigned long long kMax = std::numeric_limits<unsigned long long>::max();
  unsigned long long total = 0;
  for (int J = 0; J < num_infosets(player); ++J) {
    unsigned long long states = 1;
    for (int K : chains_[player][J]) {
      const unsigned long long width = infosets_[player][K].labels.size();
      if (states > kMax / width) return kMax;
      states *= width;
    }
    if (total > kMax - states) return kMax;
    total += states;
  }
  return total;
}

}  // namespace gtcorr
