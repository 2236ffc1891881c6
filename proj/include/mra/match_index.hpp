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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mra/lexicon.hpp"

namespace mra {

// What an accepting trie node resolves to.
struct IndexEntry {
  std::string term_id;
  std::string surface_form;  // normalized tokens joined by single spaces
  std::size_t token_count = 0;

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
};

// Token-sequence trie over the normalized surface forms of a lexicon. Edges
// are normalized tokens. Immutable once built, so it can be shared freely
// between threads.
class MatchIndex {
 public:
  using NodeId = std::size_t;
  static constexpr NodeId kRoot = 0;

  static MatchIndex Build(const lexicon::Lexicon& lex);

  // Empty index that accepts nothing.
  MatchIndex();

  std::optional<NodeId> Child(NodeId node, std::string_view token) const;
  const IndexEntry* Accepting(NodeId node) const;

  // Exact lookup of a whole normalized token sequence.
  const IndexEntry* Lookup(std::span<const std::string> tokens) const;

  // Every accepted token sequence with its binding, in sorted order.
  std::map<std::vector<std::string>, IndexEntry> Entries() const;

  std::size_t accepted_count() const { return accepted_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  struct Node {
    std::unordered_map<std::string, NodeId> children;
    std::optional<IndexEntry> accept;
  };

  std::vector<Node> nodes_;
  std::size_t accepted_ = 0;
};

}  // namespace mra
