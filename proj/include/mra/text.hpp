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
#include <string>
#include <string_view>
#include <vector>

// Text primitives shared by the lexicon and the annotator. All public offsets
// count Unicode scalar values; byte offsets are kept alongside for slicing.
namespace mra::text {

struct Token {
  std::string text;
  std::size_t start = 0;  // scalar offset, inclusive
  std::size_t end = 0;    // scalar offset, exclusive
  std::size_t byte_start = 0;
  std::size_t byte_end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

// Maximal runs of Unicode letters or decimal digits. Everything else,
// including '-' and apostrophes, separates tokens. Ill-formed UTF-8 bytes act
// as separators.
std::vector<Token> Tokenize(std::string_view text);

// Case-folds, canonically decomposes, drops nonspacing marks and recomposes.
// Idempotent.
std::string Normalize(std::string_view s);

// Tokenizes `s` and normalizes each token.
std::vector<std::string> NormalizedTokens(std::string_view s);

// Normalized tokens joined by a single space; the canonical surface form key.
std::string SurfaceKey(std::string_view s);

bool IsValidUtf8(std::string_view s);

bool IsTokenChar(char32_t c);

std::size_t ScalarLength(std::string_view s);

// byte offset of every scalar boundary: result[i] is where scalar i starts;
// result.back() == s.size().
std::vector<std::size_t> ScalarBoundaries(std::string_view s);

std::vector<char32_t> DecodeUtf8(std::string_view s);
std::string EncodeUtf8(char32_t c);

}  // namespace mra::text
