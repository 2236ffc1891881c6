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

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace mra {

// Two-letter lowercase ISO 639-1 code.
class LanguageCode {
 public:
  static std::optional<LanguageCode> Parse(std::string_view code);
  static LanguageCode English() { return LanguageCode("en"); }

  const std::string& str() const { return code_; }
  bool is_english() const { return code_ == "en"; }

  friend auto operator<=>(const LanguageCode&, const LanguageCode&) = default;

 private:
  explicit LanguageCode(std::string code) : code_(std::move(code)) {}
  std::string code_;
};

// Languages accepted for translation to English. English itself is never a
// member; it bypasses translation.
class LanguageSet {
 public:
  LanguageSet() = default;
  explicit LanguageSet(std::set<std::string> codes) : codes_(std::move(codes)) {}

  // pt, es, fr, it, de
  static LanguageSet Default();
  // Comma-separated codes; throws Config on malformed entries or "en".
  static LanguageSet FromList(std::string_view list);

  bool Contains(const LanguageCode& code) const { return codes_.contains(code.str()); }
  // Supported for upload: any translatable language or English.
  bool Accepts(const LanguageCode& code) const { return code.is_english() || Contains(code); }
  const std::set<std::string>& codes() const { return codes_; }

 private:
  std::set<std::string> codes_;
};

}  // namespace mra
