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

#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"

namespace mra::text {
namespace {

std::vector<std::tuple<std::string, std::size_t, std::size_t>> Flat(const std::vector<Token>& tokens) {
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> out;
  for (const auto& t : tokens) out.emplace_back(t.text, t.start, t.end);
  return out;
}

TEST(TokenizeTest, Empty) { EXPECT_TRUE(Tokenize("").empty()); }

TEST(TokenizeTest, FixtureSentence) {
  const std::string s = "Chest X-ray shows pleural effusion.";
  std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected;
  const auto cps = oracle::Scalars(s);
  for (const auto& w : oracle::Words(cps)) {
    expected.emplace_back(oracle::Encode(cps, w.start, w.end), w.start, w.end);
  }
  ASSERT_EQ(expected.size(), 6u);
  EXPECT_EQ(expected[0], std::make_tuple(std::string("Chest"), 0u, 5u));
  EXPECT_EQ(expected[5], std::make_tuple(std::string("effusion"), 26u, 34u));
  EXPECT_EQ(Flat(Tokenize(s)), expected);
}

TEST(TokenizeTest, ScalarOffsets) {
  const auto tokens = Tokenize("naïve");
  ASSERT_EQ(tokens.size(), 1u);
  EXPECT_EQ(tokens[0].text, "naïve");
  EXPECT_EQ(tokens[0].start, 0u);
  EXPECT_EQ(tokens[0].end, 5u);
  EXPECT_EQ(tokens[0].byte_end, 6u);
}

TEST(TokenizeTest, HyphenAndApostropheBreak) {
  EXPECT_EQ(Flat(Tokenize("X-ray")).size(), 2u);
  EXPECT_EQ(Flat(Tokenize("patient's")).size(), 2u);
  EXPECT_EQ(Flat(Tokenize("patient’s")).size(), 2u);
}

TEST(TokenizeTest, DigitsAreTokenCharacters) {
  const auto tokens = Tokenize("L5-S1 2cm");
  ASSERT_EQ(tokens.size(), 3u);
  EXPECT_EQ(tokens[0].text, "L5");
  EXPECT_EQ(tokens[2].text, "2cm");
}

TEST(TokenizeTest, IllFormedBytesSeparate) {
  const std::string s = std::string("ab") + "\xff" + "cd";
  const auto tokens = Tokenize(s);
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_EQ(tokens[0].text, "ab");
  EXPECT_EQ(tokens[1].text, "cd");
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Normalize("Pleural"), "pleural");
  EXPECT_EQ(Normalize("naïve"), "naive");
  EXPECT_EQ(Normalize(""), "");
  EXPECT_EQ(Normalize("ÉCHOGRAPHIE"), "echographie");
  EXPECT_EQ(Normalize("Straße"), "strasse");
}

TEST(NormalizeTest, DecomposedInputMatchesComposed) {
  EXPECT_EQ(Normalize("nai\xcc\x88ve"), Normalize("naïve"));
}

TEST(TextPropertyTest, TokensSliceSourceAndNormalizeIsIdempotent) {
  oracle::FixtureGenerator gen(7);
  for (int i = 0; i < 300; ++i) {
    const std::string s = gen.Text(300);
    const auto cps = DecodeUtf8(s);
    const auto bounds = ScalarBoundaries(s);
    ASSERT_EQ(bounds.size(), cps.size() + 1);
    std::size_t prev_end = 0;
    for (const auto& t : Tokenize(s)) {
      ASSERT_LT(t.start, t.end);
      ASSERT_LE(t.end, cps.size());
      ASSERT_LE(prev_end, t.start);
      prev_end = t.end;
      EXPECT_EQ(oracle::Encode(cps, t.start, t.end), t.text);
      EXPECT_EQ(s.substr(t.byte_start, t.byte_end - t.byte_start), t.text);
      EXPECT_EQ(bounds[t.start], t.byte_start);
      const std::string n = Normalize(t.text);
      EXPECT_EQ(Normalize(n), n);
    }
    EXPECT_EQ(Flat(Tokenize(s)).size(), oracle::Words(cps).size());
  }
}

TEST(Utf8Test, Validation) {
  EXPECT_TRUE(IsValidUtf8("naïve 日本"));
  EXPECT_FALSE(IsValidUtf8("\xc3"));
  EXPECT_FALSE(IsValidUtf8("\xed\xa0\x80"));  // surrogate
  EXPECT_FALSE(IsValidUtf8("\xc0\xaf"));      // overlong
  EXPECT_EQ(ScalarLength("naïve"), 5u);
}

TEST(SurfaceKeyTest, JoinsNormalizedTokens) {
  EXPECT_EQ(SurfaceKey("  Pleural   EFFUSION "), "pleural effusion");
  EXPECT_EQ(SurfaceKey("X-ray"), "x ray");
  EXPECT_EQ(SurfaceKey("--"), "");
}

}  // namespace
}  // namespace mra::text
