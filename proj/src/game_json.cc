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

#include "gtcorr/game_json.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "gtcorr/errors.h"
#include "json.hpp"
#include "json_util.h"

namespace gtcorr {
namespace {

using nlohmann::json;

class TreeReader {
 public:
  explicit TreeReader(GameTree& tree) : tree_(tree) {}

  int ReadNode(const json& j, const std::string& where, int parent, int parent_action) {
    if (!j.is_object()) throw ParseError(where, "node must be an object");
    const std::string kind = RequireString(j, "kind", where);
    const int h = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    tree_.nodes[h].parent = parent;
    tree_.nodes[h].parent_action = parent_action;
    if (kind == "terminal") {
      tree_.nodes[h].kind = NodeKind::kTerminal;
      const json& payoffs = RequireField(j, "payoffs", where);
      if (!payoffs.is_array()) throw ParseError(where + "/payoffs", "must be an array");
      if (payoffs.size() != tree_.players.size()) {
        throw ParseError(where + "/payoffs", "expected " + std::to_string(tree_.players.size()) +
                                                 " payoffs, got " +
                                                 std::to_string(payoffs.size()));
      }
      for (size_t k = 0; k < payoffs.size(); ++k) {
        tree_.nodes[h].payoffs.push_back(
            ReadRational(payoffs[k], where + "/payoffs/" + std::to_string(k)));
      }
      return h;
    }
    if (kind == "chance") {
      tree_.nodes[h].kind = NodeKind::kChance;
    } else if (kind == "decision") {
      tree_.nodes[h].kind = NodeKind::kDecision;
      const json& player = RequireField(j, "player", where);
      if (!player.is_number_integer()) throw ParseError(where + "/player", "must be an integer");
      const int p = player.get<int>();
      if (p < 0 || p >= static_cast<int>(tree_.players.size())) {
        throw ParseError(where + "/player", "player index " + std::to_string(p) +
                                                " does not name a listed player");
      }
      tree_.nodes[h].player = p;
      tree_.nodes[h].infoset = RequireString(j, "infoset", where);
      if (tree_.nodes[h].infoset.empty()) {
        throw ParseError(where + "/infoset", "infoset id must be non-empty");
      }
    } else {
      throw ParseError(where + "/kind", "unknown node kind \"" + kind + "\"");
    }
    const json& actions = RequireField(j, "actions", where);
    if (!actions.is_array()) throw ParseError(where + "/actions", "must be an array");
    for (size_t a = 0; a < actions.size(); ++a) {
      const std::string at = where + "/actions/" + std::to_string(a);
      const json& action = actions[a];
      if (!action.is_object()) throw ParseError(at, "action must be an object");
      std::string label = RequireString(action, "label", at);
      Rational prob = 0;
      if (kind == "chance") prob = ReadRational(RequireField(action, "prob", at), at + "/prob");
      const int child =
          ReadNode(RequireField(action, "child", at), at + "/child", h, static_cast<int>(a));
      Node& node = tree_.nodes[h];
      node.labels.push_back(std::move(label));
      node.children.push_back(child);
      if (kind == "chance") node.probs.push_back(prob);
    }
    return h;
  }

 private:
  GameTree& tree_;
};

nlohmann::ordered_json NodeToJson(const GameTree& tree, int h) {
  using ojson = nlohmann::ordered_json;
  const Node& node = tree.nodes[h];
  ojson j = ojson::object();
  switch (node.kind) {
    case NodeKind::kTerminal: {
      j["kind"] = "terminal";
      ojson payoffs = ojson::array();
      for (const Rational& u : node.payoffs) payoffs.push_back(ToString(u));
      j["payoffs"] = std::move(payoffs);
      return j;
    }
    case NodeKind::kChance:
      j["kind"] = "chance";
      break;
    case NodeKind::kDecision:
      j["kind"] = "decision";
      j["player"] = node.player;
      j["infoset"] = node.infoset;
      break;
  }
  ojson actions = ojson::array();
  for (size_t a = 0; a < node.children.size(); ++a) {
    ojson action = ojson::object();
    action["label"] = node.labels[a];
    if (node.kind == NodeKind::kChance) action["prob"] = ToString(node.probs[a]);
    action["child"] = NodeToJson(tree, node.children[a]);
    actions.push_back(std::move(action));
  }
  j["actions"] = std::move(actions);
  return j;
}

}  // namespace

GameTree ParseGameTree(std::string_view text) {
  const json doc = ParseJsonDocument(text);
  if (!doc.is_object()) throw ParseError("/", "game document must be a JSON object");
  GameTree tree;
  const json& players = RequireField(doc, "players", "");
  if (!players.is_array() || players.empty()) {
    throw ParseError("/players", "must be a non-empty array of strings");
  }
  for (size_t p = 0; p < players.size(); ++p) {
    if (!players[p].is_string()) {
      throw ParseError("/players/" + std::to_string(p), "player name must be a string");
    }
    tree.players.push_back(players[p].get<std::string>());
  }
  TreeReader reader(tree);
  reader.ReadNode(RequireField(doc, "root", ""), "/root", -1, -1);
  return tree;
}

Game ParseGame(std::string_view text) { return Game::FromTree(ParseGameTree(text)); }

std::string SerializeGame(const GameTree& tree) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  doc["players"] = tree.players;
  doc["root"] = NodeToJson(tree, 0);
  return doc.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace gtcorr
