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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mra/annotator.hpp"
#include "mra/language.hpp"
#include "mra/timestamp.hpp"

namespace mra {

enum class ReportStatus { kReceived, kTranslating, kTranslated, kAnnotating, kDone, kFailed };

std::string_view StatusName(ReportStatus status);
std::optional<ReportStatus> ParseStatus(std::string_view name);
inline bool IsTerminal(ReportStatus s) {
  return s == ReportStatus::kDone || s == ReportStatus::kFailed;
}

namespace event {
struct Start {};
struct TranslationSucceeded {
  std::string text;
};
struct TranslationFailed {
  std::string reason;
};
struct AnnotationSucceeded {
  std::vector<annotator::Annotation> annotations;
};
struct AnnotationFailed {
  std::string reason;
};
struct Reprocess {};
}  // namespace event

using TransitionEvent =
    std::variant<event::Start, event::TranslationSucceeded, event::TranslationFailed,
                 event::AnnotationSucceeded, event::AnnotationFailed, event::Reprocess>;

std::string_view EventName(const TransitionEvent& e);

// The legal-transition table. Start moves Received forward (to Translating,
// or straight to Annotating for English) and also moves Translated on to
// Annotating. Reprocess is only accepted in Failed. Throws IllegalTransition
// naming the status and the event otherwise.
ReportStatus Step(ReportStatus status, const LanguageCode& lang, const TransitionEvent& e);

// True when some event/language makes `from -> to` legal.
bool IsLegalEdge(ReportStatus from, ReportStatus to);

struct Report {
  std::int64_t code = 0;
  std::string category;
  LanguageCode original_language = LanguageCode::English();
  Timestamp created_at;
  std::string original_text;
  std::optional<std::string> translated_text;
  ReportStatus status = ReportStatus::kReceived;
  std::vector<annotator::Annotation> annotations;
  std::optional<std::string> failure_reason;
  // Time of the last status change and of the last entry into Received.
  Timestamp status_since;
  Timestamp received_at;

  bool processed() const { return status == ReportStatus::kDone; }
  // The English-side text handed to the annotator.
  const std::string& english_text() const {
    return translated_text ? *translated_text : original_text;
  }

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace mra
