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

#include "mra/pipeline.hpp"

#include <unistd.h>

#include <random>
#include <sstream>

#include <spdlog/spdlog.h>

#include "mra/error.hpp"
#include "mra/journal.hpp"

namespace mra::pipeline {
namespace {

std::string MakeInstanceId() {
  std::mt19937 rng(std::random_device{}());
  std::ostringstream out;
  out << ::getpid() << '-' << std::hex << (rng() & 0xffffff);
  return out.str();
}

bool IsIllegalTransition(const Error& e) {
  return e.code() == ErrorCode::kIllegalTransition || e.code() == ErrorCode::kUnknownReport;
}

}  // namespace

Pipeline::Pipeline(store::Store& store, std::shared_ptr<translator::TranslationBackend> translator,
                   std::shared_ptr<annotator::AnnotatorBackend> annotator, PipelineOptions options)
    : store_(store),
      translator_(std::move(translator)),
      annotator_(std::move(annotator)),
      options_(std::move(options)) {
  if (options_.instance_id.empty()) options_.instance_id = MakeInstanceId();
  if (options_.workers == 0) options_.workers = 1;
}

Pipeline::~Pipeline() { Stop(); }

void Pipeline::Start() {
  {
    std::lock_guard lock(mu_);
    if (started_) return;
    started_ = true;
    stopping_ = false;
  }
  SweepStalled();
  for (const auto& summary : store_.ListReports()) {
    if (!IsTerminal(summary.status)) Enqueue(summary.code);
  }
  for (std::size_t i = 0; i < options_.workers; ++i) {
    threads_.emplace_back([this, i] { WorkerLoop(i); });
  }
  threads_.emplace_back([this] { JanitorLoop(); });
}

void Pipeline::Stop() {
  {
    std::lock_guard lock(mu_);
    if (!started_) return;
    stopping_ = true;
  }
  work_cv_.notify_all();
  stop_cv_.notify_all();
  for (std::thread& t : threads_) t.join();
  threads_.clear();
  std::lock_guard lock(mu_);
  started_ = false;
  idle_cv_.notify_all();
}

void Pipeline::Enqueue(std::int64_t code) {
  {
    std::lock_guard lock(mu_);
    if (owned_.contains(code)) {
      // The owner picks it up again once it lets go.
      rerun_.insert(code);
      return;
    }
    if (!queued_.insert(code).second) return;
    queue_.push_back(code);
  }
  work_cv_.notify_one();
}

void Pipeline::Reprocess(std::int64_t code) {
  const Report report = store_.LoadReport(code);
  if (report.status != ReportStatus::kFailed) {
    throw Error(ErrorCode::kNotFailed, "report " + std::to_string(code) + " is " +
                                           std::string(StatusName(report.status)) +
                                           ", not Failed");
  }
  try {
    store_.Transition(code, event::Reprocess{}, api_owner());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIllegalTransition) {
      throw Error(ErrorCode::kNotFailed, "report " + std::to_string(code) + " is not Failed");
    }
    throw;
  }
  Enqueue(code);
}

std::size_t Pipeline::SweepStalled() {
  const std::string owner = "janitor@" + options_.instance_id;
  const Timestamp now = store_.now();
  std::size_t failed = 0;
  for (const auto& summary : store_.ListReports()) {
    if (IsTerminal(summary.status)) continue;
    const auto report = store_.FindReport(summary.code);
    if (!report || IsTerminal(report->status)) continue;
    if (now - report->received_at <= options_.stall_timeout) continue;
    try {
      switch (report->status) {
        case ReportStatus::kTranslating:
          store_.Transition(report->code, event::TranslationFailed{"stalled"}, owner);
          ++failed;
          break;
        case ReportStatus::kAnnotating:
          store_.Transition(report->code, event::AnnotationFailed{"stalled"}, owner);
          ++failed;
          break;
        default:
          // No edge leads from here to Failed; hand it back to a worker.
          Enqueue(report->code);
          break;
      }
    } catch (const Error& e) {
      if (!IsIllegalTransition(e)) throw;
    }
  }
  if (failed > 0) spdlog::warn("janitor failed {} stalled report(s)", failed);
  return failed;
}

bool Pipeline::Pause(std::chrono::milliseconds d) {
  std::unique_lock lock(mu_);
  return !stop_cv_.wait_for(lock, d, [this] { return stopping_; });
}

void Pipeline::Run(std::int64_t code, const std::string& owner) {
  while (true) {
    {
      std::lock_guard lock(mu_);
      if (stopping_) return;
    }
    const auto report = store_.FindReport(code);
    if (!report || IsTerminal(report->status)) return;
    try {
      switch (report->status) {
        case ReportStatus::kReceived:
        case ReportStatus::kTranslated:
          store_.Transition(code, event::Start{}, owner);
          break;
        case ReportStatus::kTranslating:
          if (!Translate(*report, owner)) return;
          break;
        case ReportStatus::kAnnotating:
          if (!AnnotateReport(*report, owner)) return;
          break;
        case ReportStatus::kDone:
        case ReportStatus::kFailed:
          return;
      }
    } catch (const Error& e) {
      // Someone else (the janitor, a reprocess) moved the report; this run
      // no longer owns a meaningful state.
      if (IsIllegalTransition(e)) return;
      throw;
    }
  }
}

bool Pipeline::Translate(const Report& report, const std::string& owner) {
  const translator::TranslationRequest request{report.original_text, report.original_language,
                                               LanguageCode::English()};
  const auto fail = [&](const std::string& reason) {
    store_.Transition(report.code, event::TranslationFailed{"translation failed: " + reason},
                      owner);
    return true;
  };

  translator::TranslationJob job;
  for (int attempt = 1;; ++attempt) {
    try {
      job = translator_->Submit(request);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBackendUnavailable || attempt >= options_.submit_attempts) {
        return fail(e.what());
      }
      spdlog::warn("report {}: submit attempt {} failed: {}", report.code, attempt, e.what());
      if (!Pause(options_.poll_interval)) return false;
    }
  }
  store_.Save(journal::TranslationRecorded(report.code, job), owner);

  int poll_errors = 0;
  while (true) {
    try {
      job = translator_->Poll(job.job_id);
      poll_errors = 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kBackendUnavailable || ++poll_errors >= options_.poll_failures) {
        return fail(e.what());
      }
    }
    if (translator::IsTerminal(job.state)) break;
    if (!Pause(options_.poll_interval)) return false;
  }
  store_.Save(journal::TranslationRecorded(report.code, job), owner);
  if (job.state == translator::JobState::kSucceeded) {
    store_.Transition(report.code, event::TranslationSucceeded{*job.result_text}, owner);
  } else {
    fail(job.failure_reason.value_or("unspecified failure"));
  }
  return true;
}

bool Pipeline::AnnotateReport(const Report& report, const std::string& owner) {
  annotator::AnnotationResult result;
  try {
    result = annotator_->Annotate(report.english_text());
  } catch (const Error& e) {
    store_.Transition(report.code, event::AnnotationFailed{std::string("annotation failed: ") + e.what()},
                      owner);
    return true;
  }
  store_.Save(journal::AnnotationsRecorded(report.code, annotator_->name(),
                                           result.annotations.size(), result.dropped),
              owner);
  store_.Transition(report.code, event::AnnotationSucceeded{std::move(result.annotations)}, owner);
  return true;
}

void Pipeline::WorkerLoop(std::size_t index) {
  const std::string owner = "worker-" + std::to_string(index) + "@" + options_.instance_id;
  while (true) {
    std::int64_t code;
    {
      std::unique_lock lock(mu_);
      work_cv_.wait(lock, [this] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      code = queue_.front();
      queue_.pop_front();
      queued_.erase(code);
      owned_.insert(code);
    }
    try {
      Run(code, owner);
    } catch (const std::exception& e) {
      spdlog::error("report {}: {}", code, e.what());
    }
    {
      std::lock_guard lock(mu_);
      owned_.erase(code);
      if (rerun_.erase(code) > 0 && !stopping_ && queued_.insert(code).second) {
        queue_.push_back(code);
        work_cv_.notify_one();
      }
      if (queue_.empty() && owned_.empty()) idle_cv_.notify_all();
    }
  }
}

void Pipeline::JanitorLoop() {
  while (Pause(options_.janitor_interval)) {
    try {
      SweepStalled();
    } catch (const std::exception& e) {
      spdlog::error("janitor sweep failed: {}", e.what());
    }
  }
}

bool Pipeline::WaitIdle(std::chrono::milliseconds timeout) {
  std::unique_lock lock(mu_);
  return idle_cv_.wait_for(lock, timeout, [this] { return queue_.empty() && owned_.empty(); });
}

}  // namespace mra::pipeline
