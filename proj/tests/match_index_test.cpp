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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mra/text.hpp"
#include "oracle.hpp"

namespace mra {
namespace {

using lexicon::Lexicon;
using lexicon::LexiconTerm;

TEST(MatchIndexTest, EmptyLexiconAcceptsNothing) {
  const MatchIndex index = MatchIndex::Build(Lexicon());
  EXPECT_EQ(index.accepted_count(), 0u);
  EXPECT_TRUE(index.Entries().empty());
  const std::vector<std::string> q{"chest"};
  EXPECT_EQ(index.Lookup(q), nullptr);
  EXPECT_EQ(MatchIndex().accepted_count(), 0u);
}

TEST(MatchIndexTest, TieRuleIndependentOfInsertionOrder) {
  const LexiconTerm a{"RID10", "CT", {}, std::nullopt};
  const LexiconTerm b{"RID20", "CT", {}, std::nullopt};
  const MatchIndex ab = MatchIndex::Build(Lexicon::Build({a, b}));
  const MatchIndex ba = MatchIndex::Build(Lexicon::Build({b, a}));
  EXPECT_EQ(ab.Entries(), ba.Entries());
  const std::vector<std::string> q{"ct"};
  ASSERT_NE(ab.Lookup(q), nullptr);
  EXPECT_EQ(ab.Lookup(q)->term_id, "RID10");
}

TEST(MatchIndexTest, MultiTokenSequence) {
  const MatchIndex index =
      MatchIndex::Build(Lexicon::Build({{"RID2", "pleural effusion", {}, std::nullopt}}));
  const std::vector<std::string> both{"pleural", "effusion"};
  const std::vector<std::string> first{"pleural"};
  const IndexEntry* e = index.Lookup(both);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->term_id, "RID2");
  EXPECT_EQ(e->token_count, 2u);
  EXPECT_EQ(e->surface_form, "pleural effusion");
  EXPECT_EQ(index.Lookup(first), nullptr);
  const auto node = index.Child(MatchIndex::kRoot, "pleural");
  ASSERT_TRUE(node.has_value());
  EXPECT_EQ(index.Accepting(*node), nullptr);
}

TEST(MatchIndexPropertyTest, AcceptsExactlyTheLexiconSurfaceForms) {
  oracle::FixtureGenerator gen(3);
  for (int i = 0; i < 200; ++i) {
    auto terms = gen.Terms(60);
    const Lexicon lex = Lexicon::Build(terms);
    const MatchIndex index = MatchIndex::Build(lex);
    const auto dict = oracle::Dictionary(terms);

    std::map<std::vector<std::string>, std::string> expected;
    for (const auto& [key, id] : dict) {
      std::vector<std::string> tokens;
      std::size_t pos = 0;
      while (true) {
        const std::size_t sp = key.find(' ', pos);
        tokens.push_back(key.substr(pos, sp - pos));
        if (sp == std::string::npos) break;
        pos = sp + 1;
      }
      expected[tokens] = id;
    }
    std::map<std::vector<std::string>, std::string> actual;
    for (const auto& [tokens, entry] : index.Entries()) {
      actual[tokens] = entry.term_id;
      EXPECT_EQ(entry.token_count, tokens.size());
      ASSERT_NE(lex.Find(entry.term_id), nullptr);
    }
    EXPECT_EQ(actual, expected);

    // Determinism across equal lexicons built in another order.
    std::shuffle(terms.begin(), terms.end(), std::mt19937(i));
    EXPECT_EQ(MatchIndex::Build(Lexicon::Build(terms)).Entries(), index.Entries());

    // Own label resolves to itself or a smaller id.
    for (const auto& [id, term] : lex.terms()) {
      const auto tokens = text::NormalizedTokens(term.preferred_label);
      if (tokens.empty()) continue;
      const IndexEntry* e = index.Lookup(tokens);
      ASSERT_NE(e, nullptr);
      EXPECT_FALSE(lexicon::TermIdLess()(id, e->term_id)) << id << " -> " << e->term_id;
    }
  }
}

}  // namespace
}  // namespace mra
