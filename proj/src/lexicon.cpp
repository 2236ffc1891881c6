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

#include "mra/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "mra/text.hpp"

namespace mra::lexicon {
namespace {

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t begin = 0;
  while (true) {
    const std::size_t pos = s.find(sep, begin);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(begin));
      return parts;
    }
    parts.push_back(s.substr(begin, pos - begin));
    begin = pos + 1;
  }
}

std::string_view NumericPart(std::string_view id) {
  id.remove_prefix(std::min<std::size_t>(3, id.size()));
  while (id.size() > 1 && id.front() == '0') id.remove_prefix(1);
  return id;
}

struct ParsedLine {
  std::size_t line = 0;
  LexiconTerm term;
};

// Line-level parsing shared by ValidateLexicon and ParseLexicon.
void ScanLines(std::istream& in, std::vector<ParsedLine>& parsed,
               std::vector<LexiconIssue>& issues) {
  std::string raw;
  std::size_t line_no = 0;
  const auto error = [&](ErrorCode code, std::string message) {
    issues.push_back({line_no, code, std::move(message), false});
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (Trim(raw).empty() || raw.front() == '#') continue;
    if (!text::IsValidUtf8(raw)) {
      error(ErrorCode::kMalformedLine, "line is not valid UTF-8");
      continue;
    }
    const auto fields = Split(raw, '\t');
    if (fields.size() != 4) {
      error(ErrorCode::kMalformedLine,
            "expected 4 tab-separated fields, found " + std::to_string(fields.size()));
      continue;
    }
    ParsedLine entry;
    entry.line = line_no;
    entry.term.id = std::string(Trim(fields[0]));
    if (!IsValidTermId(entry.term.id)) {
      error(ErrorCode::kInvalidId, "invalid term id '" + entry.term.id + "'");
      continue;
    }
    entry.term.preferred_label = std::string(Trim(fields[1]));
    if (entry.term.preferred_label.empty()) {
      error(ErrorCode::kMalformedLine, "empty preferred label for " + entry.term.id);
      continue;
    }
    bool ok = true;
    if (!Trim(fields[2]).empty()) {
      for (std::string_view synonym : Split(fields[2], '|')) {
        synonym = Trim(synonym);
        if (synonym.empty()) {
          error(ErrorCode::kMalformedLine, "empty synonym for " + entry.term.id);
          ok = false;
          break;
        }
        entry.term.synonyms.emplace_back(synonym);
      }
    }
    if (!ok) continue;
    const std::string_view parent = Trim(fields[3]);
    if (!parent.empty()) {
      if (!IsValidTermId(parent)) {
        error(ErrorCode::kInvalidId, "invalid parent id '" + std::string(parent) + "'");
        continue;
      }
      entry.term.parent_id = std::string(parent);
    }
    parsed.push_back(std::move(entry));
  }
}

// Cross-line checks: duplicates, dangling parents, ambiguity warnings.
void CheckTerms(const std::vector<ParsedLine>& parsed, std::vector<LexiconIssue>& issues) {
  std::unordered_map<std::string, std::size_t> first_line;
  for (const ParsedLine& entry : parsed) {
    auto [it, inserted] = first_line.emplace(entry.term.id, entry.line);
    if (!inserted) {
      issues.push_back({entry.line, ErrorCode::kDuplicateId,
                        "duplicate id " + entry.term.id + " on line " + std::to_string(entry.line) +
                            " (first defined on line " + std::to_string(it->second) + ")",
                        false});
    }
  }
  for (const ParsedLine& entry : parsed) {
    if (entry.term.parent_id && !first_line.contains(*entry.term.parent_id)) {
      issues.push_back({entry.line, ErrorCode::kDanglingParent,
                        "parent " + *entry.term.parent_id + " of " + entry.term.id +
                            " is not defined",
                        false});
    }
  }
  std::map<std::string, std::pair<std::string, std::size_t>> owners;
  for (const ParsedLine& entry : parsed) {
    std::vector<std::string> forms{entry.term.preferred_label};
    forms.insert(forms.end(), entry.term.synonyms.begin(), entry.term.synonyms.end());
    for (const std::string& form : forms) {
      const std::string key = text::SurfaceKey(form);
      if (key.empty()) {
        issues.push_back({entry.line, ErrorCode::kMalformedLine,
                          "label '" + form + "' of " + entry.term.id + " has no matchable tokens",
                          true});
        continue;
      }
      auto [it, inserted] = owners.emplace(key, std::make_pair(entry.term.id, entry.line));
      if (!inserted && it->second.first != entry.term.id) {
        const std::string& winner =
            TermIdLess{}(entry.term.id, it->second.first) ? entry.term.id : it->second.first;
        issues.push_back({entry.line, ErrorCode::kMalformedLine,
                          "surface form '" + key + "' shared by " + it->second.first + " and " +
                              entry.term.id + "; bound to " + winner,
                          true});
      }
    }
  }
  std::stable_sort(issues.begin(), issues.end(),
                   [](const LexiconIssue& a, const LexiconIssue& b) { return a.line < b.line; });
}

}  // namespace

bool IsValidTermId(std::string_view id) {
  if (id.size() < 4 || id.substr(0, 3) != "RID") return false;
  return std::all_of(id.begin() + 3, id.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool TermIdLess::operator()(std::string_view a, std::string_view b) const {
  const std::string_view na = NumericPart(a);
  const std::string_view nb = NumericPart(b);
  if (na.size() != nb.size()) return na.size() < nb.size();
  if (na != nb) return na < nb;
  return a < b;
}

Lexicon Lexicon::Build(std::vector<LexiconTerm> terms) {
  Lexicon lex;
  for (LexiconTerm& term : terms) {
    if (!IsValidTermId(term.id)) {
      throw Error(ErrorCode::kInvalidId, "invalid term id '" + term.id + "'");
    }
    std::sort(term.synonyms.begin(), term.synonyms.end());
    term.synonyms.erase(std::unique(term.synonyms.begin(), term.synonyms.end()),
                        term.synonyms.end());
    const std::string id = term.id;
    if (!lex.terms_.emplace(id, std::move(term)).second) {
      throw Error(ErrorCode::kDuplicateId, "duplicate id " + id);
    }
  }
  for (const auto& [id, term] : lex.terms_) {
    if (term.parent_id && !lex.terms_.contains(*term.parent_id)) {
      throw Error(ErrorCode::kDanglingParent,
                  "parent " + *term.parent_id + " of " + id + " is not defined");
    }
  }
  // terms_ iterates in ascending numeric id order, so the first binding wins.
  for (const auto& [id, term] : lex.terms_) {
    const auto bind = [&](const std::string& form) {
      std::string key = text::SurfaceKey(form);
      if (!key.empty()) lex.surface_forms_.emplace(std::move(key), id);
    };
    bind(term.preferred_label);
    for (const std::string& synonym : term.synonyms) bind(synonym);
  }
  return lex;
}

const LexiconTerm* Lexicon::Find(std::string_view id) const {
  const auto it = terms_.find(std::string(id));
  return it == terms_.end() ? nullptr : &it->second;
}

std::vector<LexiconIssue> ValidateLexicon(std::istream& in) {
  std::vector<ParsedLine> parsed;
  std::vector<LexiconIssue> issues;
  ScanLines(in, parsed, issues);
  CheckTerms(parsed, issues);
  return issues;
}

Lexicon ParseLexicon(std::istream& in) {
  std::vector<ParsedLine> parsed;
  std::vector<LexiconIssue> issues;
  ScanLines(in, parsed, issues);
  CheckTerms(parsed, issues);
  for (const LexiconIssue& issue : issues) {
    if (!issue.warning) {
      throw Error(issue.code, "line " + std::to_string(issue.line) + ": " + issue.message);
    }
  }
  std::vector<LexiconTerm> terms;
  terms.reserve(parsed.size());
  for (ParsedLine& entry : parsed) terms.push_back(std::move(entry.term));
  return Lexicon::Build(std::move(terms));
}

Lexicon ParseLexicon(std::string_view tsv) {
  std::istringstream in{std::string(tsv)};
  return ParseLexicon(in);
}

Lexicon LoadLexiconFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open lexicon file " + path);
  return ParseLexicon(in);
}

std::string SerializeLexicon(const Lexicon& lex) {
  std::string out;
  for (const auto& [id, term] : lex.terms()) {
    out += id;
    out += '\t';
    out += term.preferred_label;
    out += '\t';
    for (std::size_t i = 0; i < term.synonyms.size(); ++i) {
      if (i > 0) out += '|';
      out += term.synonyms[i];
    }
    out += '\t';
    if (term.parent_id) out += *term.parent_id;
    out += '\n';
  }
  return out;
}

const LexiconTerm& LookupTerm(const Lexicon& lex, std::string_view id) {
  if (const LexiconTerm* term = lex.Find(id)) return *term;
  throw Error(ErrorCode::kUnknownTerm, "unknown term " + std::string(id));
}

}  // namespace mra::lexicon
