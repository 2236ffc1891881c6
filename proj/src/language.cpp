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

#include "mra/language.hpp"

#include "mra/error.hpp"

namespace mra {

std::optional<LanguageCode> LanguageCode::Parse(std::string_view code) {
  if (code.size() != 2) return std::nullopt;
  for (char c : code) {
    if (c < 'a' || c > 'z') return std::nullopt;
  }
  return LanguageCode(std::string(code));
}

LanguageSet LanguageSet::Default() { return LanguageSet({"pt", "es", "fr", "it", "de"}); }

LanguageSet LanguageSet::FromList(std::string_view list) {
  std::set<std::string> codes;
  std::size_t begin = 0;
  while (begin <= list.size()) {
    std::size_t end = list.find(',', begin);
    if (end == std::string_view::npos) end = list.size();
    std::string_view item = list.substr(begin, end - begin);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      const auto code = LanguageCode::Parse(item);
      if (!code || code->is_english()) {
        throw Error(ErrorCode::kConfig, "invalid language code '" + std::string(item) + "'");
      }
      codes.insert(code->str());
    }
    begin = end + 1;
  }
  return LanguageSet(std::move(codes));
}

}  // namespace mra
