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

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mra/language.hpp"

namespace mra::translator {

using Clock = std::chrono::system_clock;

struct TranslationRequest {
  std::string text;
  LanguageCode source_lang = LanguageCode::English();
  LanguageCode target_lang = LanguageCode::English();

  friend bool operator==(const TranslationRequest&, const TranslationRequest&) = default;
};

enum class JobState { kPending, kRunning, kSucceeded, kFailed };

std::string_view JobStateName(JobState state);
std::optional<JobState> ParseJobState(std::string_view name);
inline bool IsTerminal(JobState state) {
  return state == JobState::kSucceeded || state == JobState::kFailed;
}

struct TranslationJob {
  std::string job_id;
  TranslationRequest request;
  JobState state = JobState::kPending;
  Clock::time_point submitted_at;
  std::optional<Clock::time_point> completed_at;
  std::optional<std::string> result_text;
  std::optional<std::string> failure_reason;

  friend bool operator==(const TranslationJob&, const TranslationJob&) = default;
};

// Throws UnsupportedLanguage or EmptyText when `req` breaks the request
// invariants for `supported`.
void ValidateRequest(const TranslationRequest& req, const LanguageSet& supported);

// Submit/poll contract implemented by every backend. Implementations are safe
// for concurrent calls on distinct jobs. Once a job is terminal, Poll keeps
// returning the identical snapshot.
class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string name() const = 0;
  virtual TranslationJob Submit(const TranslationRequest& req) = 0;
  // Throws UnknownJob for ids this backend never issued.
  virtual TranslationJob Poll(std::string_view job_id) = 0;
};

// Ordered (source phrase, English phrase) pairs.
using PhraseTable = std::vector<std::pair<std::string, std::string>>;

// Case-insensitive, longest-source-first, left-to-right, non-overlapping
// substitution. Text outside any phrase is copied unchanged.
std::string MockTranslate(const PhraseTable& table, std::string_view text);

// Built-in demo tables keyed by language code.
std::map<std::string, PhraseTable> DefaultPhraseTables();

// TSV `lang<TAB>source<TAB>english`; '#' comments and blank lines skipped.
// Entries are appended to the tables for their language.
std::map<std::string, PhraseTable> LoadPhraseTables(const std::string& path);

struct MockOptions {
  std::chrono::milliseconds latency{0};
  LanguageSet languages = LanguageSet::Default();
  std::map<std::string, PhraseTable> phrase_tables = DefaultPhraseTables();
  // When set, every job fails with this reason once its latency elapses.
  std::optional<std::string> fail_reason;
};

class MockTranslator : public TranslationBackend {
 public:
  explicit MockTranslator(MockOptions options);

  std::string name() const override { return "mock"; }
  TranslationJob Submit(const TranslationRequest& req) override;
  TranslationJob Poll(std::string_view job_id) override;

  std::size_t submitted_count() const;

 private:
  struct Entry {
    TranslationJob job;
    std::chrono::steady_clock::time_point ready_at;
  };

  MockOptions options_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Entry> jobs_;
  std::mt19937_64 rng_;
  std::size_t counter_ = 0;
};

struct RemoteTranslatorOptions {
  std::string base_url;
  std::string api_key;
  LanguageSet languages = LanguageSet::Default();
  std::chrono::milliseconds timeout{10000};
};

// Generic machine-translation service adapter:
//   POST {base}/translations {text, source_lang, target_lang} -> 201 {job_id}
//   GET  {base}/translations/{job_id} -> {status, translated_text?, reason?}
// Submit returns as soon as the service acknowledges the job.
class RemoteTranslator : public TranslationBackend {
 public:
  explicit RemoteTranslator(RemoteTranslatorOptions options);

  std::string name() const override { return "remote"; }
  TranslationJob Submit(const TranslationRequest& req) override;
  TranslationJob Poll(std::string_view job_id) override;

 private:
  RemoteTranslatorOptions options_;
  std::mutex mu_;
  std::unordered_map<std::string, TranslationJob> jobs_;
};

}  // namespace mra::translator
