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
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "mra/annotator.hpp"
#include "mra/store.hpp"
#include "mra/translator.hpp"

namespace mra::pipeline {

struct PipelineOptions {
  std::size_t workers = 4;
  std::chrono::milliseconds poll_interval{2000};
  std::chrono::milliseconds stall_timeout{std::chrono::minutes(15)};
  std::chrono::milliseconds janitor_interval{std::chrono::minutes(1)};
  // Transport failures tolerated on submit, and consecutive ones on poll,
  // before the translation is declared failed.
  int submit_attempts = 3;
  int poll_failures = 5;
  // Distinguishes owners across process restarts. Generated when empty.
  std::string instance_id;
};

// Drives reports from Received to Done or Failed. A pool of workers consumes
// a queue of report codes; at most one worker owns a report at any time.
// Every state change is persisted through the store before the work it
// announces is started.
class Pipeline {
 public:
  Pipeline(store::Store& store, std::shared_ptr<translator::TranslationBackend> translator,
           std::shared_ptr<annotator::AnnotatorBackend> annotator, PipelineOptions options = {});
  ~Pipeline();

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  // Runs a stall sweep, re-enqueues every non-terminal report left over from
  // a previous process, then starts the workers and the janitor.
  void Start();
  // Stops accepting work; in-flight reports stay in their persisted state
  // and are resumed by the next Start.
  void Stop();

  void Enqueue(std::int64_t code);

  // Failed -> Received, then re-enqueue. Throws UnknownReport or NotFailed.
  void Reprocess(std::int64_t code);

  // Moves reports that have been non-terminal for longer than the stall
  // timeout out of their state: Translating/Annotating become Failed
  // ("stalled"), Received/Translated are re-enqueued. Returns how many
  // reports were failed.
  std::size_t SweepStalled();

  // Synchronously drives one report as `owner` until it is terminal, the
  // pipeline stops, or another party changes its status.
  void Run(std::int64_t code, const std::string& owner);

  // Blocks until the queue is empty and no report is owned, or the timeout
  // elapses. Returns true when idle.
  bool WaitIdle(std::chrono::milliseconds timeout);

  const std::string& instance_id() const { return options_.instance_id; }
  std::string api_owner() const { return "api@" + options_.instance_id; }
  std::string translator_name() const { return translator_->name(); }
  std::string annotator_name() const { return annotator_->name(); }

 private:
  void WorkerLoop(std::size_t index);
  void JanitorLoop();
  bool Translate(const Report& report, const std::string& owner);
  bool AnnotateReport(const Report& report, const std::string& owner);
  // Sleeps for `d` unless Stop is called; returns false when stopping.
  bool Pause(std::chrono::milliseconds d);

  store::Store& store_;
  std::shared_ptr<translator::TranslationBackend> translator_;
  std::shared_ptr<annotator::AnnotatorBackend> annotator_;
  PipelineOptions options_;

  std::mutex mu_;
  std::condition_variable work_cv_;
  std::condition_variable idle_cv_;
  std::condition_variable stop_cv_;
  std::deque<std::int64_t> queue_;
  std::set<std::int64_t> queued_;
  std::set<std::int64_t> owned_;
  std::set<std::int64_t> rerun_;
  bool stopping_ = false;
  bool started_ = false;
  std::vector<std::thread> threads_;
};

}  // namespace mra::pipeline
