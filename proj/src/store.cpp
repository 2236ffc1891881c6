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

#include "mra/store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include "mra/error.hpp"
#include "mra/text.hpp"

namespace mra::store {
namespace {

using journal::JournalRecord;
using journal::RecordKind;
using nlohmann::json;

[[noreturn]] void Corrupt(const JournalRecord& r, const std::string& why) {
  throw Error(ErrorCode::kCorruptJournal,
              "record seq " + std::to_string(r.seq) + " (" + std::string(KindName(r.kind)) +
                  ", report " + std::to_string(r.code) + "): " + why);
}

Report& ExistingReport(StoreState& state, const JournalRecord& r) {
  auto it = state.reports.find(r.code);
  if (it == state.reports.end()) Corrupt(r, "unknown report");
  return it->second;
}

void ApplyCreated(StoreState& state, const JournalRecord& r) {
  const json& p = r.payload;
  if (state.reports.contains(r.code) || r.code <= state.max_code) Corrupt(r, "code reused");
  if (!p.contains("category") || !p["category"].is_string() || !p.contains("language") ||
      !p["language"].is_string() || !p.contains("text") || !p["text"].is_string() ||
      !p.contains("created_at") || !p["created_at"].is_string()) {
    Corrupt(r, "incomplete payload");
  }
  const auto lang = LanguageCode::Parse(p["language"].get<std::string>());
  const auto created = ParseTimestamp(p["created_at"].get<std::string>());
  if (!lang || !created) Corrupt(r, "bad language or timestamp");

  Report report;
  report.code = r.code;
  report.category = p["category"].get<std::string>();
  report.original_language = *lang;
  report.created_at = *created;
  report.original_text = p["text"].get<std::string>();
  report.status = ReportStatus::kReceived;
  report.status_since = *created;
  report.received_at = *created;
  state.reports.emplace(r.code, std::move(report));
  state.max_code = r.code;
}

void ApplyStatusChanged(StoreState& state, const JournalRecord& r) {
  Report& report = ExistingReport(state, r);
  const json& p = r.payload;
  const auto from = p.contains("from") && p["from"].is_string()
                        ? ParseStatus(p["from"].get<std::string>())
                        : std::nullopt;
  const auto to =
      p.contains("to") && p["to"].is_string() ? ParseStatus(p["to"].get<std::string>()) : std::nullopt;
  auto e = journal::EventFromPayload(p);
  if (!from || !to || !e) Corrupt(r, "incomplete payload");
  if (*from != report.status) {
    Corrupt(r, "expected status " + std::string(StatusName(*from)) + " but report is " +
                   std::string(StatusName(report.status)));
  }
  ReportStatus next;
  try {
    next = Step(report.status, report.original_language, *e);
  } catch (const Error& err) {
    Corrupt(r, err.what());
  }
  if (next != *to) Corrupt(r, "transition target mismatch");

  report.status = next;
  report.status_since = r.at;
  if (auto* s = std::get_if<event::TranslationSucceeded>(&*e)) {
    report.translated_text = std::move(s->text);
  } else if (auto* s = std::get_if<event::AnnotationSucceeded>(&*e)) {
    report.annotations = std::move(s->annotations);
  } else if (auto* f = std::get_if<event::TranslationFailed>(&*e)) {
    report.failure_reason = std::move(f->reason);
  } else if (auto* f = std::get_if<event::AnnotationFailed>(&*e)) {
    report.failure_reason = std::move(f->reason);
  } else if (std::holds_alternative<event::Reprocess>(*e)) {
    report.translated_text.reset();
    report.annotations.clear();
    report.failure_reason.reset();
    report.received_at = r.at;
  }
}

void ApplyTranslation(StoreState& state, const JournalRecord& r) {
  Report& report = ExistingReport(state, r);
  if (report.original_language.is_english()) Corrupt(r, "English reports are never translated");
  if (report.status != ReportStatus::kTranslating) Corrupt(r, "report is not translating");
  auto job = journal::JobFromJson(r.payload, report.original_text, report.original_language);
  if (!job) Corrupt(r, "bad job payload");
  if (auto by_code = state.jobs.find(r.code); by_code != state.jobs.end()) {
    auto it = by_code->second.find(job->job_id);
    if (it != by_code->second.end() && translator::IsTerminal(it->second.state) &&
        it->second != *job) {
      Corrupt(r, "terminal job snapshot changed");
    }
  }
  state.jobs[r.code][job->job_id] = std::move(*job);
}

void ApplyAnnotations(StoreState& state, const JournalRecord& r) {
  const Report& report = ExistingReport(state, r);
  if (report.status != ReportStatus::kAnnotating) Corrupt(r, "report is not annotating");
  const json& p = r.payload;
  if (!p.contains("backend") || !p["backend"].is_string() || !p.contains("count") ||
      !p["count"].is_number_unsigned() || !p.contains("dropped") ||
      !p["dropped"].is_number_unsigned()) {
    Corrupt(r, "incomplete payload");
  }
}

json ReportToCanonicalJson(const Report& r) {
  json annotations = json::array();
  for (const auto& a : r.annotations) annotations.push_back(journal::AnnotationToJson(a));
  return {{"code", r.code},
          {"category", r.category},
          {"original_language", r.original_language.str()},
          {"created_at", FormatTimestamp(r.created_at)},
          {"original_text", r.original_text},
          {"translated_text", r.translated_text ? json(*r.translated_text) : json(nullptr)},
          {"status", StatusName(r.status)},
          {"annotations", std::move(annotations)},
          {"failure_reason", r.failure_reason ? json(*r.failure_reason) : json(nullptr)},
          {"status_since", FormatTimestamp(r.status_since)},
          {"received_at", FormatTimestamp(r.received_at)}};
}

void WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kIo, std::string("journal write failed: ") + std::strerror(errno));
    }
    data.remove_prefix(static_cast<std::size_t>(n));
  }
}

}  // namespace

void Apply(StoreState& state, const JournalRecord& record) {
  if (record.seq <= state.last_seq) Corrupt(record, "sequence number did not increase");
  switch (record.kind) {
    case RecordKind::kReportCreated: ApplyCreated(state, record); break;
    case RecordKind::kStatusChanged: ApplyStatusChanged(state, record); break;
    case RecordKind::kTranslationRecorded: ApplyTranslation(state, record); break;
    case RecordKind::kAnnotationsRecorded: ApplyAnnotations(state, record); break;
  }
  state.last_seq = record.seq;
}

json StateToJson(const StoreState& state) {
  json reports = json::array();
  for (const auto& [code, report] : state.reports) reports.push_back(ReportToCanonicalJson(report));
  json jobs = json::object();
  for (const auto& [code, by_id] : state.jobs) {
    json list = json::array();
    for (const auto& [id, job] : by_id) list.push_back(journal::JobToJson(job));
    jobs[std::to_string(code)] = std::move(list);
  }
  return {{"reports", std::move(reports)},
          {"jobs", std::move(jobs)},
          {"last_seq", state.last_seq},
          {"max_code", state.max_code}};
}

RecoveryResult Recover(const std::filesystem::path& path, std::optional<std::uint64_t> up_to_seq) {
  RecoveryResult result;
  std::ifstream in(path, std::ios::binary);
  if (!in) return result;
  const std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};

  std::size_t pos = 0;
  while (pos < data.size()) {
    const std::size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) break;  // torn final write
    const std::string_view line(data.data() + pos, nl - pos);
    auto record = journal::DecodeRecord(line);
    if (!record) break;
    // Apply validates before it mutates, so a rejected record leaves the
    // state untouched.
    try {
      Apply(result.state, *record);
    } catch (const Error&) {
      break;
    }
    result.records.push_back(std::move(*record));
    pos = nl + 1;
    if (up_to_seq && result.state.last_seq >= *up_to_seq) {
      result.valid_bytes = pos;
      return result;
    }
  }
  result.valid_bytes = pos;
  if (pos < data.size()) {
    std::size_t lines = 0;
    std::istringstream rest(data.substr(pos));
    for (std::string line; std::getline(rest, line);) {
      if (!line.empty()) ++lines;
    }
    result.discarded = std::max<std::size_t>(lines, 1);
  }
  return result;
}

bool NewerFirst(const ReportSummary& a, const ReportSummary& b) {
  if (a.created_at != b.created_at) return a.created_at > b.created_at;
  return a.code > b.code;
}

Store::Store(StoreOptions options) : options_(std::move(options)) {}

Store::~Store() {
  if (fd_ >= 0) ::close(fd_);
}

std::unique_ptr<Store> Store::Open(StoreOptions options) {
  std::unique_ptr<Store> store(new Store(std::move(options)));
  const auto& path = store->options_.journal_path;
  if (path.empty()) return store;

  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  RecoveryResult recovered = Recover(path);
  std::error_code ec;
  const auto size = std::filesystem::exists(path, ec) ? std::filesystem::file_size(path, ec) : 0;
  if (recovered.valid_bytes < size) {
    std::filesystem::resize_file(path, recovered.valid_bytes, ec);
    if (ec) throw Error(ErrorCode::kIo, "cannot truncate journal: " + ec.message());
  }
  store->state_ = std::move(recovered.state);
  store->records_ = std::move(recovered.records);
  store->discarded_on_open_ = recovered.discarded;

  store->fd_ = ::open(path.c_str(), O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
  if (store->fd_ < 0) {
    throw Error(ErrorCode::kIo, "cannot open journal " + path.string() + ": " + std::strerror(errno));
  }
  return store;
}

void Store::SetCommitObserver(CommitObserver observer) {
  std::unique_lock lock(mu_);
  observer_ = std::move(observer);
}

JournalRecord Store::CommitLocked(JournalRecord draft, std::string_view owner) {
  draft.seq = state_.last_seq + 1;
  if (draft.kind != RecordKind::kReportCreated || draft.at == Timestamp{}) {
    draft.at = options_.clock();
  }
  draft.owner = std::string(owner);

  // Validate against a scratch copy of just the affected report so a rejected
  // record never reaches the disk.
  StoreState scratch;
  scratch.last_seq = state_.last_seq;
  scratch.max_code = state_.max_code;
  if (auto it = state_.reports.find(draft.code); it != state_.reports.end()) {
    scratch.reports.emplace(*it);
  } else if (draft.kind != RecordKind::kReportCreated) {
    throw Error(ErrorCode::kUnknownReport, "unknown report " + std::to_string(draft.code));
  }
  if (auto it = state_.jobs.find(draft.code); it != state_.jobs.end()) scratch.jobs.emplace(*it);
  try {
    Apply(scratch, draft);
  } catch (const Error& err) {
    throw Error(ErrorCode::kIllegalTransition, err.what());
  }

  if (fd_ >= 0) {
    WriteAll(fd_, journal::EncodeRecord(draft));
    if (options_.sync_writes) ::fdatasync(fd_);
  }
  Apply(state_, draft);
  records_.push_back(draft);
  if (observer_) observer_(draft, state_);
  return draft;
}

Report Store::CreateReport(std::string_view category, std::string_view language,
                           std::string_view text, std::string_view owner) {
  if (text.size() > options_.max_text_bytes) {
    throw Error(ErrorCode::kTooLarge, "report text exceeds " +
                                          std::to_string(options_.max_text_bytes) + " bytes");
  }
  if (!text::IsValidUtf8(text)) throw Error(ErrorCode::kInvalidEncoding, "text is not UTF-8");
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    throw Error(ErrorCode::kEmptyText, "report text is empty");
  }
  const auto lang = LanguageCode::Parse(language);
  if (!lang || !options_.languages.Accepts(*lang)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "language '" + std::string(language) + "' is not supported");
  }
  std::unique_lock lock(mu_);
  const Timestamp now = options_.clock();
  JournalRecord draft =
      journal::ReportCreated(state_.max_code + 1, category, *lang, now, text);
  draft.at = now;
  const JournalRecord committed = CommitLocked(std::move(draft), owner);
  return state_.reports.at(committed.code);
}

JournalRecord Store::Save(JournalRecord draft, std::string_view owner) {
  std::unique_lock lock(mu_);
  return CommitLocked(std::move(draft), owner);
}

Report Store::Transition(std::int64_t code, const TransitionEvent& e, std::string_view owner) {
  std::unique_lock lock(mu_);
  auto it = state_.reports.find(code);
  if (it == state_.reports.end()) {
    throw Error(ErrorCode::kUnknownReport, "unknown report " + std::to_string(code));
  }
  const ReportStatus from = it->second.status;
  const ReportStatus to = Step(from, it->second.original_language, e);
  CommitLocked(journal::StatusChanged(code, from, to, e), owner);
  return state_.reports.at(code);
}

std::optional<Report> Store::FindReport(std::int64_t code) const {
  std::shared_lock lock(mu_);
  auto it = state_.reports.find(code);
  if (it == state_.reports.end()) return std::nullopt;
  return it->second;
}

Report Store::LoadReport(std::int64_t code) const {
  auto report = FindReport(code);
  if (!report) throw Error(ErrorCode::kUnknownReport, "unknown report " + std::to_string(code));
  return std::move(*report);
}

std::vector<ReportSummary> Store::ListReports() const {
  std::vector<ReportSummary> out;
  {
    std::shared_lock lock(mu_);
    out.reserve(state_.reports.size());
    for (const auto& [code, r] : state_.reports) {
      out.push_back({r.code, r.category, r.original_language, r.created_at, r.processed(),
                     r.status});
    }
  }
  std::sort(out.begin(), out.end(), NewerFirst);
  return out;
}

std::vector<translator::TranslationJob> Store::TranslationJobs(std::int64_t code) const {
  std::shared_lock lock(mu_);
  std::vector<translator::TranslationJob> out;
  if (auto it = state_.jobs.find(code); it != state_.jobs.end()) {
    for (const auto& [id, job] : it->second) out.push_back(job);
  }
  return out;
}

StoreState Store::Snapshot() const {
  std::shared_lock lock(mu_);
  return state_;
}

std::vector<JournalRecord> Store::Records() const {
  std::shared_lock lock(mu_);
  return records_;
}

}  // namespace mra::store
