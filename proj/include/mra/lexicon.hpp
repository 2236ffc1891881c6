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
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mra/error.hpp"

namespace mra::lexicon {

struct LexiconTerm {
  std::string id;
  std::string preferred_label;
  std::vector<std::string> synonyms;
  std::optional<std::string> parent_id;

  friend bool operator==(const LexiconTerm&, const LexiconTerm&) = default;
};

// True when `id` is `RID` followed by one or more ASCII digits.
bool IsValidTermId(std::string_view id);

// Orders term ids by their numeric part; ids with equal numbers (RID7 vs
// RID007) fall back to plain string order so the ordering stays total.
struct TermIdLess {
  bool operator()(std::string_view a, std::string_view b) const;
};

class Lexicon {
 public:
  using TermMap = std::map<std::string, LexiconTerm, TermIdLess>;

  Lexicon() = default;

  // Validates ids, uniqueness and parent references, sorts synonyms and binds
  // each surface form to the numerically smallest id that produces it.
  static Lexicon Build(std::vector<LexiconTerm> terms);

  const TermMap& terms() const { return terms_; }
  // normalized surface form -> term id
  const std::map<std::string, std::string>& surface_forms() const { return surface_forms_; }

  const LexiconTerm* Find(std::string_view id) const;
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  TermMap terms_;
  std::map<std::string, std::string> surface_forms_;
};

// One problem found while reading a lexicon file. Warnings never make a
// lexicon unusable.
struct LexiconIssue {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::kMalformedLine;
  std::string message;
  bool warning = false;
};

// Reads the whole stream and reports every violation in line order.
std::vector<LexiconIssue> ValidateLexicon(std::istream& in);

// Throws mra::Error for the first error in line order.
Lexicon ParseLexicon(std::istream& in);
Lexicon ParseLexicon(std::string_view tsv);
Lexicon LoadLexiconFile(const std::string& path);

// Canonical TSV: terms in numeric id order, synonyms sorted.
std::string SerializeLexicon(const Lexicon& lex);

const LexiconTerm& LookupTerm(const Lexicon& lex, std::string_view id);

}  // namespace mra::lexicon
