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

#include "mra/error.hpp"
#include "mra/report.hpp"

namespace mra {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

constexpr ReportStatus kAllStatuses[] = {ReportStatus::kReceived,   ReportStatus::kTranslating,
                                         ReportStatus::kTranslated, ReportStatus::kAnnotating,
                                         ReportStatus::kDone,       ReportStatus::kFailed};

}  // namespace

std::string_view StatusName(ReportStatus status) {
  switch (status) {
    case ReportStatus::kReceived: return "Received";
    case ReportStatus::kTranslating: return "Translating";
    case ReportStatus::kTranslated: return "Translated";
    case ReportStatus::kAnnotating: return "Annotating";
    case ReportStatus::kDone: return "Done";
    case ReportStatus::kFailed: return "Failed";
  }
  return "Received";
}

std::optional<ReportStatus> ParseStatus(std::string_view name) {
  for (ReportStatus s : kAllStatuses) {
    if (StatusName(s) == name) return s;
  }
  return std::nullopt;
}

std::string_view EventName(const TransitionEvent& e) {
  return std::visit(Overloaded{
                        [](const event::Start&) { return std::string_view("Start"); },
                        [](const event::TranslationSucceeded&) {
                          return std::string_view("TranslationSucceeded");
                        },
                        [](const event::TranslationFailed&) {
                          return std::string_view("TranslationFailed");
                        },
                        [](const event::AnnotationSucceeded&) {
                          return std::string_view("AnnotationSucceeded");
                        },
                        [](const event::AnnotationFailed&) {
                          return std::string_view("AnnotationFailed");
                        },
                        [](const event::Reprocess&) { return std::string_view("Reprocess"); },
                    },
                    e);
}

ReportStatus Step(ReportStatus status, const LanguageCode& lang, const TransitionEvent& e) {
  using S = ReportStatus;
  std::optional<S> next;
  switch (status) {
    case S::kReceived:
      if (std::holds_alternative<event::Start>(e)) {
        next = lang.is_english() ? S::kAnnotating : S::kTranslating;
      }
      break;
    case S::kTranslating:
      if (std::holds_alternative<event::TranslationSucceeded>(e)) next = S::kTranslated;
      if (std::holds_alternative<event::TranslationFailed>(e)) next = S::kFailed;
      break;
    case S::kTranslated:
      if (std::holds_alternative<event::Start>(e)) next = S::kAnnotating;
      break;
    case S::kAnnotating:
      if (std::holds_alternative<event::AnnotationSucceeded>(e)) next = S::kDone;
      if (std::holds_alternative<event::AnnotationFailed>(e)) next = S::kFailed;
      break;
    case S::kDone:
      break;
    case S::kFailed:
      if (std::holds_alternative<event::Reprocess>(e)) next = S::kReceived;
      break;
  }
  if (!next) {
    throw Error(ErrorCode::kIllegalTransition, "event " + std::string(EventName(e)) +
                                                   " is not applicable in status " +
                                                   std::string(StatusName(status)));
  }
  return *next;
}

bool IsLegalEdge(ReportStatus from, ReportStatus to) {
  using S = ReportStatus;
  switch (from) {
    case S::kReceived: return to == S::kTranslating || to == S::kAnnotating;
    case S::kTranslating: return to == S::kTranslated || to == S::kFailed;
    case S::kTranslated: return to == S::kAnnotating;
    case S::kAnnotating: return to == S::kDone || to == S::kFailed;
    case S::kDone: return false;
    case S::kFailed: return to == S::kReceived;
  }
  return false;
}

}  // namespace mra
