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

#include "mra/translator.hpp"

#include <unicode/uchar.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "http_util.hpp"
#include "mra/error.hpp"
#include "mra/text.hpp"

namespace mra::translator {
namespace {

std::vector<char32_t> Fold(std::string_view s) {
  std::vector<char32_t> out = text::DecodeUtf8(s);
  for (char32_t& c : out) {
    c = static_cast<char32_t>(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
  }
  return out;
}

std::string Hex(std::uint64_t value) {
  std::ostringstream out;
  out << std::hex << value;
  return out.str();
}

}  // namespace

std::string_view JobStateName(JobState state) {
  switch (state) {
    case JobState::kPending: return "pending";
    case JobState::kRunning: return "running";
    case JobState::kSucceeded: return "succeeded";
    case JobState::kFailed: return "failed";
  }
  return "pending";
}

std::optional<JobState> ParseJobState(std::string_view name) {
  for (JobState state : {JobState::kPending, JobState::kRunning, JobState::kSucceeded,
                         JobState::kFailed}) {
    if (JobStateName(state) == name) return state;
  }
  return std::nullopt;
}

void ValidateRequest(const TranslationRequest& req, const LanguageSet& supported) {
  if (req.source_lang.is_english()) {
    throw Error(ErrorCode::kUnsupportedLanguage, "English text is not translated");
  }
  if (!supported.Contains(req.source_lang)) {
    throw Error(ErrorCode::kUnsupportedLanguage,
                "language '" + req.source_lang.str() + "' is not supported");
  }
  if (!req.target_lang.is_english()) {
    throw Error(ErrorCode::kUnsupportedLanguage, "target language must be en");
  }
  if (req.text.empty()) throw Error(ErrorCode::kEmptyText, "nothing to translate");
}

std::string MockTranslate(const PhraseTable& table, std::string_view text) {
  struct Phrase {
    std::vector<char32_t> folded;
    const std::string* english;
  };
  std::vector<Phrase> phrases;
  for (const auto& [source, english] : table) {
    if (source.empty()) continue;
    phrases.push_back({Fold(source), &english});
  }
  std::stable_sort(phrases.begin(), phrases.end(), [](const Phrase& a, const Phrase& b) {
    return a.folded.size() > b.folded.size();
  });

  const std::vector<std::size_t> bounds = text::ScalarBoundaries(text);
  const std::vector<char32_t> folded = Fold(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < folded.size()) {
    const Phrase* hit = nullptr;
    for (const Phrase& phrase : phrases) {
      if (phrase.folded.size() <= folded.size() - i &&
          std::equal(phrase.folded.begin(), phrase.folded.end(), folded.begin() + i)) {
        hit = &phrase;
        break;
      }
    }
    if (hit) {
      out += *hit->english;
      i += hit->folded.size();
    } else {
      out.append(text.substr(bounds[i], bounds[i + 1] - bounds[i]));
      ++i;
    }
  }
  return out;
}

std::map<std::string, PhraseTable> LoadPhraseTables(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open phrase table " + path);
  std::map<std::string, PhraseTable> tables;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t a = line.find('\t');
    const std::size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos || line.find('\t', b + 1) != std::string::npos) {
      throw Error(ErrorCode::kMalformedLine,
                  path + ":" + std::to_string(line_no) + ": expected lang, source, english");
    }
    std::string source = line.substr(a + 1, b - a - 1);
    std::string english = line.substr(b + 1);
    if (source.empty() || english.empty()) {
      throw Error(ErrorCode::kMalformedLine,
                  path + ":" + std::to_string(line_no) + ": empty phrase");
    }
    tables[line.substr(0, a)].emplace_back(std::move(source), std::move(english));
  }
  return tables;
}

MockTranslator::MockTranslator(MockOptions options)
    : options_(std::move(options)), rng_(std::random_device{}()) {}

TranslationJob MockTranslator::Submit(const TranslationRequest& req) {
  ValidateRequest(req, options_.languages);
  std::lock_guard lock(mu_);
  Entry entry;
  entry.job.job_id = "mock-" + std::to_string(++counter_) + "-" + Hex(rng_());
  entry.job.request = req;
  entry.job.state = JobState::kPending;
  entry.job.submitted_at = Clock::now();
  entry.ready_at = std::chrono::steady_clock::now() + options_.latency;
  TranslationJob snapshot = entry.job;
  jobs_.emplace(snapshot.job_id, std::move(entry));
  return snapshot;
}

TranslationJob MockTranslator::Poll(std::string_view job_id) {
  std::lock_guard lock(mu_);
  auto it = jobs_.find(std::string(job_id));
  if (it == jobs_.end()) {
    throw Error(ErrorCode::kUnknownJob, "unknown translation job " + std::string(job_id));
  }
  TranslationJob& job = it->second.job;
  if (IsTerminal(job.state)) return job;
  if (std::chrono::steady_clock::now() < it->second.ready_at) {
    job.state = JobState::kRunning;
    return job;
  }
  job.completed_at = std::max(Clock::now(), job.submitted_at);
  if (options_.fail_reason) {
    job.state = JobState::kFailed;
    job.failure_reason = *options_.fail_reason;
  } else {
    job.state = JobState::kSucceeded;
    const auto table = options_.phrase_tables.find(job.request.source_lang.str());
    job.result_text = table == options_.phrase_tables.end()
                          ? job.request.text
                          : MockTranslate(table->second, job.request.text);
  }
  return job;
}

std::size_t MockTranslator::submitted_count() const {
  std::lock_guard lock(mu_);
  return jobs_.size();
}

RemoteTranslator::RemoteTranslator(RemoteTranslatorOptions options)
    : options_(std::move(options)) {}

TranslationJob RemoteTranslator::Submit(const TranslationRequest& req) {
  if (options_.api_key.empty()) {
    throw Error(ErrorCode::kMissingCredentials, "remote translator requires an API key");
  }
  ValidateRequest(req, options_.languages);
  http::JsonClient client(options_.base_url, options_.api_key, options_.timeout);
  const http::JsonResponse response =
      client.Post("/translations", {{"text", req.text},
                                    {"source_lang", req.source_lang.str()},
                                    {"target_lang", req.target_lang.str()}});
  if (response.status != 201 && response.status != 200) {
    throw Error(ErrorCode::kBackendUnavailable,
                "translation service rejected the job with HTTP " +
                    std::to_string(response.status));
  }
  const auto doc = nlohmann::json::parse(response.body, nullptr, false);
  if (!doc.is_object() || !doc.contains("job_id") || !doc["job_id"].is_string()) {
    throw Error(ErrorCode::kBackendUnavailable, "translation service returned no job_id");
  }
  TranslationJob job;
  job.job_id = doc["job_id"].get<std::string>();
  job.request = req;
  job.state = JobState::kPending;
  job.submitted_at = Clock::now();
  std::lock_guard lock(mu_);
  jobs_[job.job_id] = job;
  return job;
}

TranslationJob RemoteTranslator::Poll(std::string_view job_id) {
  TranslationJob job;
  {
    std::lock_guard lock(mu_);
    auto it = jobs_.find(std::string(job_id));
    if (it == jobs_.end()) {
      throw Error(ErrorCode::kUnknownJob, "unknown translation job " + std::string(job_id));
    }
    if (IsTerminal(it->second.state)) return it->second;
    job = it->second;
  }

  http::JsonClient client(options_.base_url, options_.api_key, options_.timeout);
  const http::JsonResponse response = client.Get("/translations/" + job.job_id);
  if (response.status == 404) {
    throw Error(ErrorCode::kUnknownJob, "translation service does not know job " + job.job_id);
  }
  if (response.status != 200) {
    throw Error(ErrorCode::kBackendUnavailable,
                "translation service returned HTTP " + std::to_string(response.status));
  }
  const auto doc = nlohmann::json::parse(response.body, nullptr, false);
  const auto state = doc.is_object() && doc.contains("status") && doc["status"].is_string()
                         ? ParseJobState(doc["status"].get<std::string>())
                         : std::nullopt;
  if (!state) {
    throw Error(ErrorCode::kBackendUnavailable, "translation service returned no valid status");
  }
  job.state = *state;
  if (job.state == JobState::kSucceeded) {
    if (doc.contains("translated_text") && doc["translated_text"].is_string()) {
      job.result_text = doc["translated_text"].get<std::string>();
    } else {
      job.state = JobState::kFailed;
      job.failure_reason = "service reported success without translated_text";
    }
  } else if (job.state == JobState::kFailed) {
    job.failure_reason = doc.contains("reason") && doc["reason"].is_string()
                             ? doc["reason"].get<std::string>()
                             : std::string("unspecified failure");
  }
  if (IsTerminal(job.state)) job.completed_at = std::max(Clock::now(), job.submitted_at);

  std::lock_guard lock(mu_);
  TranslationJob& stored = jobs_[job.job_id];
  // A concurrent poll may have finished the job first; its snapshot wins.
  if (!IsTerminal(stored.state)) stored = job;
  return stored;
}

}  // namespace mra::translator
