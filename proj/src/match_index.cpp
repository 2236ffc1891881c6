// Copyright 2026 The MRA Authors.
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

#include "mra/match_index.hpp"

#include <functional>

namespace mra {
namespace {

std::vector<std::string> SplitKey(const std::string& key) {
  std::vector<std::string> tokens;
  std::size_t begin = 0;
  while (begin <= key.size()) {
    const std::size_t pos = key.find(' ', begin);
    const std::size_t end = pos == std::string::npos ? key.size() : pos;
    tokens.push_back(key.substr(begin, end - begin));
    begin = end + 1;
  }
  return tokens;
}

}  // namespace

MatchIndex::MatchIndex() : nodes_(1) {}

MatchIndex MatchIndex::Build(const lexicon::Lexicon& lex) {
  MatchIndex index;
  // surface_forms() already binds every form to its smallest id.
  for (const auto& [key, id] : lex.surface_forms()) {
    const std::vector<std::string> tokens = SplitKey(key);
    NodeId node = kRoot;
    for (const std::string& token : tokens) {
      auto it = index.nodes_[node].children.find(token);
      if (it == index.nodes_[node].children.end()) {
        const NodeId next = index.nodes_.size();
        index.nodes_[node].children.emplace(token, next);
        index.nodes_.emplace_back();
        node = next;
      } else {
        node = it->second;
      }
    }
    index.nodes_[node].accept = IndexEntry{id, key, tokens.size()};
    ++index.accepted_;
  }
  return index;
}

std::optional<MatchIndex::NodeId> MatchIndex::Child(NodeId node, std::string_view token) const {
  const auto& children = nodes_[node].children;
  const auto it = children.find(std::string(token));
  if (it == children.end()) return std::nullopt;
  return it->second;
}

const IndexEntry* MatchIndex::Accepting(NodeId node) const {
  const auto& accept = nodes_[node].accept;
  return accept ? &*accept : nullptr;
}

const IndexEntry* MatchIndex::Lookup(std::span<const std::string> tokens) const {
  if (tokens.empty()) return nullptr;
  NodeId node = kRoot;
  for (const std::string& token : tokens) {
    const auto next = Child(node, token);
    if (!next) return nullptr;
    node = *next;
  }
  return Accepting(node);
}

std::map<std::vector<std::string>, IndexEntry> MatchIndex::Entries() const {
  std::map<std::vector<std::string>, IndexEntry> out;
  std::vector<std::string> path;
  std::function<void(NodeId)> walk = [&](NodeId node) {
    if (const IndexEntry* entry = Accepting(node)) out.emplace(path, *entry);
    for (const auto& [token, child] : nodes_[node].children) {
      path.push_back(token);
      walk(child);
      path.pop_back();
    }
  };
  walk(kRoot);
  return out;
}

}  // namespace mra
