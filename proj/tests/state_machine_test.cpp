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

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <tuple>

#include "mra/error.hpp"
#include "mra/report.hpp"

namespace mra {
namespace {

using S = ReportStatus;

const S kStatuses[] = {S::kReceived, S::kTranslating, S::kTranslated,
                       S::kAnnotating, S::kDone, S::kFailed};

std::vector<TransitionEvent> AllEvents() {
  return {event::Start{},
          event::TranslationSucceeded{"text"},
          event::TranslationFailed{"why"},
          event::AnnotationSucceeded{{}},
          event::AnnotationFailed{"why"},
          event::Reprocess{}};
}

LanguageCode Lang(const char* code) { return *LanguageCode::Parse(code); }

TEST(StepTest, Examples) {
  EXPECT_EQ(Step(S::kReceived, Lang("pt"), event::Start{}), S::kTranslating);
  EXPECT_EQ(Step(S::kReceived, Lang("en"), event::Start{}), S::kAnnotating);
  try {
    Step(S::kDone, Lang("pt"), event::Start{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllegalTransition);
    const std::string msg = e.what();
    EXPECT_NE(msg.find("Done"), std::string::npos);
    EXPECT_NE(msg.find("Start"), std::string::npos);
  }
}

// The whole table, written out independently of the implementation.
TEST(StepTest, ExhaustiveTable) {
  // (status, event index, english?) -> next
  std::map<std::tuple<S, std::size_t, bool>, S> legal;
  for (bool en : {false, true}) {
    legal[{S::kReceived, 0, en}] = en ? S::kAnnotating : S::kTranslating;
    legal[{S::kTranslated, 0, en}] = S::kAnnotating;
    legal[{S::kTranslating, 1, en}] = S::kTranslated;
    legal[{S::kTranslating, 2, en}] = S::kFailed;
    legal[{S::kAnnotating, 3, en}] = S::kDone;
    legal[{S::kAnnotating, 4, en}] = S::kFailed;
    legal[{S::kFailed, 5, en}] = S::kReceived;
  }
  const auto events = AllEvents();
  std::set<std::pair<S, S>> edges;
  for (S s : kStatuses) {
    for (std::size_t e = 0; e < events.size(); ++e) {
      for (bool en : {false, true}) {
        const LanguageCode lang = Lang(en ? "en" : "fr");
        auto it = legal.find({s, e, en});
        if (it == legal.end()) {
          EXPECT_THROW(Step(s, lang, events[e]), Error)
              << StatusName(s) << " " << EventName(events[e]);
        } else {
          EXPECT_EQ(Step(s, lang, events[e]), it->second)
              << StatusName(s) << " " << EventName(events[e]);
          edges.insert({s, it->second});
        }
      }
    }
  }
  for (S from : kStatuses) {
    for (S to : kStatuses) {
      EXPECT_EQ(IsLegalEdge(from, to), edges.contains({from, to}))
          << StatusName(from) << "->" << StatusName(to);
    }
  }
  for (S s : kStatuses) EXPECT_EQ(IsTerminal(s), s == S::kDone || s == S::kFailed);
}

TEST(StatusNameTest, RoundTrip) {
  for (S s : kStatuses) EXPECT_EQ(ParseStatus(StatusName(s)), s);
  EXPECT_FALSE(ParseStatus("done").has_value());
}

}  // namespace
}  // namespace mra
