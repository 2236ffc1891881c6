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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mra/journal.hpp"
#include "mra/language.hpp"
#include "mra/report.hpp"
#include "mra/translator.hpp"

namespace mra::store {

struct ReportSummary {
  std::int64_t code = 0;
  std::string category;
  LanguageCode original_language = LanguageCode::English();
  Timestamp created_at;
  bool processed = false;
  ReportStatus status = ReportStatus::kReceived;

  friend bool operator==(const ReportSummary&, const ReportSummary&) = default;
};

// Everything the journal describes. Produced only by folding records.
struct StoreState {
  std::map<std::int64_t, Report> reports;
  // report code -> job id -> latest snapshot
  std::map<std::int64_t, std::map<std::string, translator::TranslationJob>> jobs;
  std::uint64_t last_seq = 0;
  std::int64_t max_code = 0;

  friend bool operator==(const StoreState&, const StoreState&) = default;
};

// Applies one record. Throws CorruptJournal when the record does not describe
// a legal change of `state` (unknown report, illegal transition, bad payload,
// non-increasing seq, ...).
void Apply(StoreState& state, const journal::JournalRecord& record);

// Canonical JSON rendering of a state; equal states render identically.
nlohmann::json StateToJson(const StoreState& state);

struct RecoveryResult {
  StoreState state;
  std::vector<journal::JournalRecord> records;
  std::size_t discarded = 0;     // lines after the longest valid prefix
  std::size_t valid_bytes = 0;   // length of that prefix in the file
};

// Replays `path` from scratch. A missing file is an empty journal. Replay
// stops at the first line that fails to decode or apply; everything after it
// is counted in `discarded`. When `up_to_seq` is set, replay also stops after
// that sequence number.
RecoveryResult Recover(const std::filesystem::path& path,
                       std::optional<std::uint64_t> up_to_seq = std::nullopt);

struct StoreOptions {
  // Empty keeps the journal in memory only.
  std::filesystem::path journal_path;
  std::size_t max_text_bytes = 1 << 20;
  LanguageSet languages = LanguageSet::Default();
  std::function<Timestamp()> clock = Now;
  bool sync_writes = true;
};

// Journal-backed report store. Mutations are serialized through a single
// writer lock and are durable before they return; readers get copies.
class Store {
 public:
  // Recovers any existing journal and truncates a garbled tail so new
  // records append after the valid prefix.
  static std::unique_ptr<Store> Open(StoreOptions options);
  ~Store();

  Store(const Store&) = delete;
  Store& operator=(const Store&) = delete;

  // Throws EmptyText, TooLarge, InvalidEncoding or UnsupportedLanguage.
  Report CreateReport(std::string_view category, std::string_view language, std::string_view text,
                      std::string_view owner);

  // Fills in seq and at, applies and appends the record. Throws UnknownReport
  // for unknown codes and IllegalTransition when the record does not apply.
  journal::JournalRecord Save(journal::JournalRecord draft, std::string_view owner);

  // Convenience over Save for status changes driven by `e`.
  Report Transition(std::int64_t code, const TransitionEvent& e, std::string_view owner);

  Report LoadReport(std::int64_t code) const;
  std::optional<Report> FindReport(std::int64_t code) const;
  std::vector<ReportSummary> ListReports() const;
  std::vector<translator::TranslationJob> TranslationJobs(std::int64_t code) const;
  StoreState Snapshot() const;
  std::vector<journal::JournalRecord> Records() const;

  std::size_t discarded_on_open() const { return discarded_on_open_; }
  const StoreOptions& options() const { return options_; }
  Timestamp now() const { return options_.clock(); }

  // Called under the writer lock after every commit, with the committed
  // record and the resulting state.
  using CommitObserver = std::function<void(const journal::JournalRecord&, const StoreState&)>;
  void SetCommitObserver(CommitObserver observer);

 private:
  explicit Store(StoreOptions options);
  journal::JournalRecord CommitLocked(journal::JournalRecord draft, std::string_view owner);

  StoreOptions options_;
  mutable std::shared_mutex mu_;
  StoreState state_;
  std::vector<journal::JournalRecord> records_;
  int fd_ = -1;
  std::size_t discarded_on_open_ = 0;
  CommitObserver observer_;
};

// Sort order of ListReports: created_at descending, then code descending.
bool NewerFirst(const ReportSummary& a, const ReportSummary& b);

}  // namespace mra::store
