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

#include "mra/journal.hpp"

namespace mra::journal {
namespace {

using nlohmann::json;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

bool IsString(const json& j, const char* key) { return j.contains(key) && j[key].is_string(); }

std::optional<Timestamp> TimeField(const json& j, const char* key) {
  if (!IsString(j, key)) return std::nullopt;
  return ParseTimestamp(j[key].get<std::string>());
}

}  // namespace

std::string_view KindName(RecordKind kind) {
  switch (kind) {
    case RecordKind::kReportCreated: return "ReportCreated";
    case RecordKind::kStatusChanged: return "StatusChanged";
    case RecordKind::kTranslationRecorded: return "TranslationRecorded";
    case RecordKind::kAnnotationsRecorded: return "AnnotationsRecorded";
  }
  return "ReportCreated";
}

std::optional<RecordKind> ParseKind(std::string_view name) {
  for (RecordKind k : {RecordKind::kReportCreated, RecordKind::kStatusChanged,
                       RecordKind::kTranslationRecorded, RecordKind::kAnnotationsRecorded}) {
    if (KindName(k) == name) return k;
  }
  return std::nullopt;
}

std::string EncodeRecord(const JournalRecord& record) {
  json doc = {{"v", kSchemaVersion},
              {"seq", record.seq},
              {"at", FormatTimestamp(record.at)},
              {"owner", record.owner},
              {"kind", KindName(record.kind)},
              {"code", record.code},
              {"payload", record.payload}};
  return doc.dump() + "\n";
}

std::optional<JournalRecord> DecodeRecord(std::string_view line) {
  if (!line.empty() && line.back() == '\n') line.remove_suffix(1);
  json doc = json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) return std::nullopt;
  if (!doc.contains("v") || doc["v"] != kSchemaVersion) return std::nullopt;
  if (!doc.contains("seq") || !doc["seq"].is_number_unsigned()) return std::nullopt;
  if (!doc.contains("code") || !doc["code"].is_number_integer()) return std::nullopt;
  if (!IsString(doc, "owner") || !IsString(doc, "kind")) return std::nullopt;
  if (!doc.contains("payload") || !doc["payload"].is_object()) return std::nullopt;
  const auto at = TimeField(doc, "at");
  const auto kind = ParseKind(doc["kind"].get<std::string>());
  if (!at || !kind) return std::nullopt;
  JournalRecord record;
  record.seq = doc["seq"].get<std::uint64_t>();
  record.at = *at;
  record.owner = doc["owner"].get<std::string>();
  record.kind = *kind;
  record.code = doc["code"].get<std::int64_t>();
  record.payload = std::move(doc["payload"]);
  return record;
}

JournalRecord ReportCreated(std::int64_t code, std::string_view category, const LanguageCode& lang,
                            Timestamp created_at, std::string_view text) {
  JournalRecord r;
  r.kind = RecordKind::kReportCreated;
  r.code = code;
  r.payload = {{"category", category},
               {"language", lang.str()},
               {"created_at", FormatTimestamp(created_at)},
               {"text", text}};
  return r;
}

JournalRecord StatusChanged(std::int64_t code, ReportStatus from, ReportStatus to,
                            const TransitionEvent& e) {
  JournalRecord r;
  r.kind = RecordKind::kStatusChanged;
  r.code = code;
  r.payload = {{"from", StatusName(from)}, {"to", StatusName(to)}, {"event", EventName(e)}};
  std::visit(Overloaded{
                 [](const event::Start&) {},
                 [](const event::Reprocess&) {},
                 [&](const event::TranslationSucceeded& s) { r.payload["translated_text"] = s.text; },
                 [&](const event::TranslationFailed& f) { r.payload["reason"] = f.reason; },
                 [&](const event::AnnotationFailed& f) { r.payload["reason"] = f.reason; },
                 [&](const event::AnnotationSucceeded& s) {
                   json list = json::array();
                   for (const auto& a : s.annotations) list.push_back(AnnotationToJson(a));
                   r.payload["annotations"] = std::move(list);
                 },
             },
             e);
  return r;
}

JournalRecord TranslationRecorded(std::int64_t code, const translator::TranslationJob& job) {
  JournalRecord r;
  r.kind = RecordKind::kTranslationRecorded;
  r.code = code;
  r.payload = JobToJson(job);
  return r;
}

JournalRecord AnnotationsRecorded(std::int64_t code, std::string_view backend, std::size_t count,
                                  std::size_t dropped) {
  JournalRecord r;
  r.kind = RecordKind::kAnnotationsRecorded;
  r.code = code;
  r.payload = {{"backend", backend}, {"count", count}, {"dropped", dropped}};
  return r;
}

std::optional<TransitionEvent> EventFromPayload(const json& payload) {
  if (!IsString(payload, "event")) return std::nullopt;
  const std::string name = payload["event"].get<std::string>();
  if (name == "Start") return event::Start{};
  if (name == "Reprocess") return event::Reprocess{};
  if (name == "TranslationSucceeded") {
    if (!IsString(payload, "translated_text")) return std::nullopt;
    return event::TranslationSucceeded{payload["translated_text"].get<std::string>()};
  }
  if (name == "TranslationFailed" || name == "AnnotationFailed") {
    if (!IsString(payload, "reason")) return std::nullopt;
    std::string reason = payload["reason"].get<std::string>();
    if (name == "TranslationFailed") return event::TranslationFailed{std::move(reason)};
    return event::AnnotationFailed{std::move(reason)};
  }
  if (name == "AnnotationSucceeded") {
    if (!payload.contains("annotations") || !payload["annotations"].is_array()) return std::nullopt;
    event::AnnotationSucceeded success;
    for (const json& item : payload["annotations"]) {
      auto a = AnnotationFromJson(item);
      if (!a) return std::nullopt;
      success.annotations.push_back(std::move(*a));
    }
    return success;
  }
  return std::nullopt;
}

json AnnotationToJson(const annotator::Annotation& a) {
  return {{"term_id", a.term_id},
          {"start", a.start},
          {"end", a.end},
          {"matched_text", a.matched_text},
          {"surface_form", a.surface_form},
          {"source", annotator::SourceName(a.source)}};
}

std::optional<annotator::Annotation> AnnotationFromJson(const json& j) {
  if (!j.is_object() || !IsString(j, "term_id") || !IsString(j, "matched_text") ||
      !IsString(j, "surface_form") || !IsString(j, "source") || !j.contains("start") ||
      !j["start"].is_number_unsigned() || !j.contains("end") || !j["end"].is_number_unsigned()) {
    return std::nullopt;
  }
  annotator::Annotation a;
  a.term_id = j["term_id"].get<std::string>();
  a.start = j["start"].get<std::size_t>();
  a.end = j["end"].get<std::size_t>();
  a.matched_text = j["matched_text"].get<std::string>();
  a.surface_form = j["surface_form"].get<std::string>();
  const std::string source = j["source"].get<std::string>();
  if (source == "local") {
    a.source = annotator::AnnotationSource::kLocal;
  } else if (source == "remote") {
    a.source = annotator::AnnotationSource::kRemote;
  } else {
    return std::nullopt;
  }
  return a;
}

json JobToJson(const translator::TranslationJob& job) {
  json j = {{"job_id", job.job_id},
            {"state", translator::JobStateName(job.state)},
            {"source_lang", job.request.source_lang.str()},
            {"target_lang", job.request.target_lang.str()},
            {"submitted_at", FormatTimestamp(std::chrono::floor<std::chrono::milliseconds>(
                                 job.submitted_at))}};
  if (job.completed_at) {
    j["completed_at"] =
        FormatTimestamp(std::chrono::floor<std::chrono::milliseconds>(*job.completed_at));
  }
  if (job.result_text) j["result_text"] = *job.result_text;
  if (job.failure_reason) j["failure_reason"] = *job.failure_reason;
  return j;
}

std::optional<translator::TranslationJob> JobFromJson(const json& j, const std::string& text,
                                                      const LanguageCode& lang) {
  if (!j.is_object() || !IsString(j, "job_id") || !IsString(j, "state")) return std::nullopt;
  const auto state = translator::ParseJobState(j["state"].get<std::string>());
  const auto submitted = TimeField(j, "submitted_at");
  if (!state || !submitted) return std::nullopt;
  translator::TranslationJob job;
  job.job_id = j["job_id"].get<std::string>();
  job.state = *state;
  job.request = {text, lang, LanguageCode::English()};
  job.submitted_at = *submitted;
  if (j.contains("completed_at")) {
    const auto completed = TimeField(j, "completed_at");
    if (!completed) return std::nullopt;
    job.completed_at = *completed;
  }
  if (IsString(j, "result_text")) job.result_text = j["result_text"].get<std::string>();
  if (IsString(j, "failure_reason")) job.failure_reason = j["failure_reason"].get<std::string>();
  // result_text iff succeeded, failure_reason iff failed, completed_at iff terminal
  if (job.result_text.has_value() != (job.state == translator::JobState::kSucceeded) ||
      job.failure_reason.has_value() != (job.state == translator::JobState::kFailed) ||
      job.completed_at.has_value() != translator::IsTerminal(job.state)) {
    return std::nullopt;
  }
  return job;
}

}  // namespace mra::journal
