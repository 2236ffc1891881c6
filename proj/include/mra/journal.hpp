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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mra/annotator.hpp"
#include "mra/report.hpp"
#include "mra/timestamp.hpp"
#include "mra/translator.hpp"

namespace mra::journal {

inline constexpr int kSchemaVersion = 1;

enum class RecordKind { kReportCreated, kStatusChanged, kTranslationRecorded, kAnnotationsRecorded };

std::string_view KindName(RecordKind kind);
std::optional<RecordKind> ParseKind(std::string_view name);

// One line of the journal. `seq` and `at` are assigned by the store on commit.
struct JournalRecord {
  std::uint64_t seq = 0;
  Timestamp at;
  std::string owner;
  RecordKind kind = RecordKind::kReportCreated;
  std::int64_t code = 0;
  nlohmann::json payload = nlohmann::json::object();

  friend bool operator==(const JournalRecord&, const JournalRecord&) = default;
};

// Single-line JSON document with a trailing newline.
std::string EncodeRecord(const JournalRecord& record);
// nullopt for anything that is not a complete, well-typed v1 record.
std::optional<JournalRecord> DecodeRecord(std::string_view line);

// Payload builders. The draft records they return still need seq/at.
JournalRecord ReportCreated(std::int64_t code, std::string_view category, const LanguageCode& lang,
                            Timestamp created_at, std::string_view text);
JournalRecord StatusChanged(std::int64_t code, ReportStatus from, ReportStatus to,
                            const TransitionEvent& e);
JournalRecord TranslationRecorded(std::int64_t code, const translator::TranslationJob& job);
// Metadata about an annotation pass; the annotations themselves ride on the
// AnnotationSucceeded transition.
JournalRecord AnnotationsRecorded(std::int64_t code, std::string_view backend, std::size_t count,
                                  std::size_t dropped);

// Reconstructs the event carried by a StatusChanged payload.
std::optional<TransitionEvent> EventFromPayload(const nlohmann::json& payload);

nlohmann::json AnnotationToJson(const annotator::Annotation& a);
std::optional<annotator::Annotation> AnnotationFromJson(const nlohmann::json& j);
nlohmann::json JobToJson(const translator::TranslationJob& job);
std::optional<translator::TranslationJob> JobFromJson(const nlohmann::json& j,
                                                      const std::string& text,
                                                      const LanguageCode& lang);

}  // namespace mra::journal
