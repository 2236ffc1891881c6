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

#include "mra/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <algorithm>

namespace mra::text {
namespace {

const icu::Normalizer2& Nfd() {
  UErrorCode status = U_ZERO_ERROR;
  static const icu::Normalizer2* nfd = icu::Normalizer2::getNFDInstance(status);
  return *nfd;
}

const icu::Normalizer2& Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  static const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  return *nfc;
}

bool IsAscii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

}  // namespace

bool IsTokenChar(char32_t c) {
  return u_isalpha(static_cast<UChar32>(c)) || u_isdigit(static_cast<UChar32>(c));
}

std::vector<Token> Tokenize(std::string_view text) {
  std::vector<Token> tokens;
  const auto* bytes = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t pos = 0;
  std::size_t scalar = 0;
  bool in_token = false;
  Token current;
  while (pos < length) {
    const int32_t begin = pos;
    UChar32 c;
    U8_NEXT(bytes, pos, length, c);
    const bool word = c >= 0 && IsTokenChar(static_cast<char32_t>(c));
    if (word && !in_token) {
      current = Token{};
      current.start = scalar;
      current.byte_start = static_cast<std::size_t>(begin);
      in_token = true;
    } else if (!word && in_token) {
      current.end = scalar;
      current.byte_end = static_cast<std::size_t>(begin);
      current.text.assign(text.substr(current.byte_start, current.byte_end - current.byte_start));
      tokens.push_back(std::move(current));
      in_token = false;
    }
    ++scalar;
  }
  if (in_token) {
    current.end = scalar;
    current.byte_end = text.size();
    current.text.assign(text.substr(current.byte_start));
    tokens.push_back(std::move(current));
  }
  return tokens;
}

std::string Normalize(std::string_view s) {
  if (IsAscii(s)) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](char c) {
      return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
    });
    return out;
  }
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString decomposed =
      Nfd().normalize(icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), s.size())), status);
  decomposed.foldCase(U_FOLD_CASE_DEFAULT);
  decomposed = Nfd().normalize(decomposed, status);

  icu::UnicodeString stripped;
  for (int32_t i = 0; i < decomposed.length();) {
    const UChar32 c = decomposed.char32At(i);
    if (u_charType(c) != U_NON_SPACING_MARK) stripped.append(c);
    i += U16_LENGTH(c);
  }
  icu::UnicodeString composed = Nfc().normalize(stripped, status);
  std::string out;
  if (U_FAILURE(status)) return out;
  composed.toUTF8String(out);
  return out;
}

std::vector<std::string> NormalizedTokens(std::string_view s) {
  std::vector<std::string> out;
  for (const Token& token : Tokenize(s)) out.push_back(Normalize(token.text));
  return out;
}

std::string SurfaceKey(std::string_view s) {
  std::string key;
  for (const std::string& token : NormalizedTokens(s)) {
    if (!key.empty()) key += ' ';
    key += token;
  }
  return key;
}

bool IsValidUtf8(std::string_view s) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t pos = 0;
  while (pos < length) {
    UChar32 c;
    U8_NEXT(bytes, pos, length, c);
    if (c < 0) return false;
  }
  return true;
}

std::size_t ScalarLength(std::string_view s) {
  return ScalarBoundaries(s).size() - 1;
}

std::vector<std::size_t> ScalarBoundaries(std::string_view s) {
  std::vector<std::size_t> bounds;
  bounds.reserve(s.size() + 1);
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t pos = 0;
  while (pos < length) {
    bounds.push_back(static_cast<std::size_t>(pos));
    UChar32 c;
    U8_NEXT(bytes, pos, length, c);
  }
  bounds.push_back(s.size());
  return bounds;
}

std::vector<char32_t> DecodeUtf8(std::string_view s) {
  std::vector<char32_t> out;
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  const auto length = static_cast<int32_t>(s.size());
  int32_t pos = 0;
  while (pos < length) {
    UChar32 c;
    U8_NEXT(bytes, pos, length, c);
    out.push_back(c < 0 ? char32_t{0xFFFD} : static_cast<char32_t>(c));
  }
  return out;
}

std::string EncodeUtf8(char32_t c) {
  std::string out;
  icu::UnicodeString(static_cast<UChar32>(c)).toUTF8String(out);
  return out;
}

}  // namespace mra::text
