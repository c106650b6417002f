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

#ifndef GTCORR_GAME_H_
#define GTCORR_GAME_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gtcorr/rational.h"

namespace gtcorr {

enum class NodeKind { kChance, kDecision, kTerminal };

// One node of an unvalidated game tree. Nodes are stored in document
// (preorder) order with the root at index 0.
struct Node {
  NodeKind kind = NodeKind::kTerminal;
  int player = -1;             // decision nodes only
  std::string infoset;         // decision nodes only
  std::vector<std::string> labels;
  std::vector<Rational> probs;  // chance nodes only, parallel to labels
  std::vector<int> children;    // parallel to labels
  std::vector<Rational> payoffs;  // terminal nodes only, one per player
  int parent = -1;
  int parent_action = -1;
};

// The raw tree as read from a document. May violate any game invariant;
// Validate() reports what is wrong and Game::FromTree() refuses it.
struct GameTree {
  std::vector<std::string> players;
  std::vector<Node> nodes;

  // JSON-pointer style location of a node, e.g. "/root/actions/1/child".
  std::string NodeLocation(int node) const;
};

enum class ViolationKind { kPerfectRecall, kChanceSum, kInfosetActionMismatch, kTreeShape };

std::string_view ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string location;
  std::string message;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks tree shape, chance sums, infoset action consistency and perfect
// recall. Never throws; violations are data.
ValidationReport Validate(const GameTree& tree);

// A sequence of one player: either the empty sequence (infoset == -1) or the
// last (infoset, action) pair. Infoset and action are player-local indices.
struct Sequence {
  int infoset = -1;
  int action = -1;
  bool empty() const { return infoset < 0; }
};

struct Infoset {
  std::string id;
  int player = -1;
  std::vector<std::string> labels;  // document order of the first member
  std::vector<int> nodes;
  int parent_sequence = 0;  // sigma_i(I)
  int first_sequence = 0;   // sequence index of (I, labels[0])
  int depth = 0;            // number of own infosets strictly above I
  // Action indices sorted by label bytes; lex_order[0] is the
  // lexicographically first action.
  std::vector<int> lex_order;
};

// Validated, indexed, immutable extensive-form game with perfect recall.
//
// Per player, infosets are numbered in order of first appearance in a
// preorder walk, so every infoset comes after the infosets on its own
// history. Sequence 0 is the empty sequence; the sequences of infoset I are
// first_sequence .. first_sequence + |A_I| - 1 in document action order.
class Game {
 public:
  // Throws GameError listing the violations if the tree does not validate.
  static Game FromTree(GameTree tree);

  const GameTree& tree() const { return tree_; }
  int num_players() const { return static_cast<int>(tree_.players.size()); }
  const std::vector<std::string>& player_names() const { return tree_.players; }
  int num_nodes() const { return static_cast<int>(tree_.nodes.size()); }
  const Node& node(int h) const { return tree_.nodes[h]; }

  // Terminals are indexed 0..|Z|-1 in document order.
  int num_terminals() const { return static_cast<int>(terminal_nodes_.size()); }
  int terminal_node(int z) const { return terminal_nodes_[z]; }
  int terminal_index(int node) const { return terminal_index_[node]; }
  // "(a1,a2,...)": the action labels on the root-to-z path.
  const std::string& terminal_id(int z) const { return terminal_ids_[z]; }
  int FindTerminal(std::string_view id) const;  // -1 if absent
  const Rational& payoff(int z, int player) const {
    return tree_.nodes[terminal_nodes_[z]].payoffs[player];
  }
  // Product of chance probabilities on the root-to-z path.
  const Rational& chance_reach(int z) const { return chance_reach_[z]; }

  int num_infosets(int player) const { return static_cast<int>(infosets_[player].size()); }
  const Infoset& infoset(int player, int I) const { return infosets_[player][I]; }
  // Player-local infoset of a decision node.
  int node_infoset(int h) const { return node_infoset_[h]; }
  int num_actions(int player, int I) const {
    return static_cast<int>(infosets_[player][I].labels.size());
  }

  int num_sequences(int player) const { return static_cast<int>(sequences_[player].size()); }
  const Sequence& sequence(int player, int s) const { return sequences_[player][s]; }
  int SequenceOf(int player, int I, int action) const {
    return infosets_[player][I].first_sequence + action;
  }
  // Parent of a non-empty sequence Ia, i.e. sigma_i(I).
  int ParentSequence(int player, int s) const;
  // Infosets I with sigma_i(I) == s.
  std::span<const int> ChildInfosets(int player, int s) const { return child_infosets_[player][s]; }
  // Terminals z with sigma_i(z) == s.
  std::span<const int> TerminalsAt(int player, int s) const { return terminals_at_[player][s]; }
  // sigma_p(h): the last own sequence of `player` on the path to node h.
  int NodeSequence(int h, int player) const { return node_sequence_[h][player]; }
  int TerminalSequence(int z, int player) const {
    return node_sequence_[terminal_nodes_[z]][player];
  }
  // Infosets of `player` from the top down to and including I.
  const std::vector<int>& InfosetChain(int player, int I) const { return chains_[player][I]; }

  // Partial order queries, each O(depth).
  bool SequencePrecedes(int player, int s, int t) const;
  bool InfosetPrecedes(int player, int I, int J) const;
  bool SequencePrecedesInfoset(int player, int s, int I) const;
  bool InfosetPrecedesNode(int player, int I, int h) const;
  bool NodePrecedes(int h, int g) const;

  // Terminals z with I before z, in index order.
  const std::vector<int>& TerminalsBelow(int player, int I) const {
    return terminals_below_[player][I];
  }

  // Lookups by name. Players accept a name or a 0-based index.
  int FindPlayer(std::string_view name_or_index) const;  // name or 1-based index; throws GameError
  int FindInfoset(int player, std::string_view id) const;  // -1 if absent
  int FindAction(int player, int I, std::string_view label) const;  // -1 if absent
  // Parses "I:a", "∅" or "" into a sequence index; throws GameError.
  int ParseSequence(int player, std::string_view text) const;
  // "∅" or "I:a".
  std::string SequenceName(int player, int s) const;

  // Number of (infoset, recommendation-history) states the behavioral
  // deviation dynamic program visits: sum over infosets J of the product of
  // |A| along J's chain. Saturates at UINT64_MAX.
  unsigned long long RecommendationStateCount(int player) const;

 private:
  Game() = default;
  void Build();

  GameTree tree_;
  std::vector<int> terminal_nodes_;
  std::vector<int> terminal_index_;
  std::vector<std::string> terminal_ids_;
  std::vector<Rational> chance_reach_;
  std::vector<int> node_infoset_;
  std::vector<std::vector<int>> node_sequence_;
  std::vector<std::vector<Infoset>> infosets_;
  std::vector<std::vector<Sequence>> sequences_;
  std::vector<std::vector<std::vector<int>>> child_infosets_;
  std::vector<std::vector<std::vector<int>>> terminals_at_;
  std::vector<std::vector<std::vector<int>>> chains_;
  std::vector<std::vector<std::vector<int>>> terminals_below_;
};

}  // namespace gtcorr

#endif  // GTCORR_GAME_H_
