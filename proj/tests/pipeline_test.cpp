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

#include <gtest/gtest.h>

#include <atomic>
#include <map>

#include "mra/error.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace mra::pipeline {
namespace {

using namespace std::chrono_literals;
using translator::JobState;
using translator::MockOptions;
using translator::MockTranslator;

const char* kPtText = "Radiografia de tórax mostra derrame pleural.";

std::vector<lexicon::LexiconTerm> FixtureTerms() {
  std::vector<lexicon::LexiconTerm> terms;
  const auto lex = lexicon::ParseLexicon(std::string_view(testing::kFixtureLexicon));
  for (const auto& [id, t] : lex.terms()) terms.push_back(t);
  return terms;
}

std::shared_ptr<annotator::LocalAnnotator> FixtureAnnotator() {
  return std::make_shared<annotator::LocalAnnotator>(
      std::make_shared<MatchIndex>(testing::FixtureIndex()));
}

PipelineOptions FastOptions(std::size_t workers = 4) {
  PipelineOptions o;
  o.workers = workers;
  o.poll_interval = 10ms;
  o.instance_id = "test";
  return o;
}

// Mock translator whose failures can be switched on and off, and which can
// refuse the first few submissions as if the service were unreachable.
class ScriptedTranslator : public translator::TranslationBackend {
 public:
  ScriptedTranslator() : ok_(MockOptions{}), failing_([] {
    MockOptions o;
    o.fail_reason = "engine offline";
    return o;
  }()) {}

  std::string name() const override { return "scripted"; }
  translator::TranslationJob Submit(const translator::TranslationRequest& req) override {
    ++submits;
    if (unavailable_submits > 0) {
      --unavailable_submits;
      throw Error(ErrorCode::kBackendUnavailable, "connection refused");
    }
    auto job = (fail ? failing_ : ok_).Submit(req);
    std::lock_guard lock(mu_);
    owner_[job.job_id] = fail.load();
    return job;
  }
  translator::TranslationJob Poll(std::string_view id) override {
    bool failing;
    {
      std::lock_guard lock(mu_);
      failing = owner_.at(std::string(id));
    }
    return (failing ? failing_ : ok_).Poll(id);
  }

  std::atomic<bool> fail{false};
  std::atomic<int> unavailable_submits{0};
  std::atomic<int> submits{0};

 private:
  MockTranslator ok_;
  MockTranslator failing_;
  std::mutex mu_;
  std::map<std::string, bool> owner_;
};

class ThrowingAnnotator : public annotator::AnnotatorBackend {
 public:
  std::string name() const override { return "broken"; }
  annotator::AnnotationResult Annotate(std::string_view) override {
    throw Error(ErrorCode::kBackendUnavailable, "annotator unreachable");
  }
};

bool AllTerminal(const store::Store& s) {
  for (const auto& r : s.ListReports()) {
    if (!IsTerminal(r.status)) return false;
  }
  return true;
}

// Checks that every report's recorded status sequence is a path in the
// legal-transition graph starting from Received.
void ExpectLegalPaths(const std::vector<journal::JournalRecord>& records) {
  std::map<std::int64_t, ReportStatus> current;
  for (const auto& r : records) {
    if (r.kind == journal::RecordKind::kReportCreated) {
      current[r.code] = ReportStatus::kReceived;
    } else if (r.kind == journal::RecordKind::kStatusChanged) {
      const auto from = ParseStatus(r.payload["from"].get<std::string>());
      const auto to = ParseStatus(r.payload["to"].get<std::string>());
      ASSERT_TRUE(from && to);
      EXPECT_EQ(*from, current.at(r.code));
      EXPECT_TRUE(IsLegalEdge(*from, *to)) << StatusName(*from) << "->" << StatusName(*to);
      current[r.code] = *to;
    }
  }
}

TEST(PipelineTest, PortugueseReportReachesDone) {
  auto store = store::Store::Open({});
  auto mock = std::make_shared<MockTranslator>(MockOptions{});
  Pipeline p(*store, mock, FixtureAnnotator(), FastOptions());
  p.Start();
  const auto code = store->CreateReport("Ultrasound", "pt", kPtText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));

  const Report r = store->LoadReport(code);
  ASSERT_EQ(r.status, ReportStatus::kDone);
  const std::string expected_text =
      translator::MockTranslate(translator::DefaultPhraseTables().at("pt"), kPtText);
  EXPECT_EQ(r.translated_text, expected_text);
  EXPECT_EQ(oracle::ToHits(r.annotations), oracle::Annotate(expected_text, FixtureTerms()));
  EXPECT_GE(r.annotations.size(), 1u);

  const auto jobs = store->TranslationJobs(code);
  ASSERT_EQ(jobs.size(), 1u);
  EXPECT_EQ(jobs[0].state, JobState::kSucceeded);
  ExpectLegalPaths(store->Records());
}

TEST(PipelineTest, EnglishBypassWithEmptyLexicon) {
  auto store = store::Store::Open({});
  auto mock = std::make_shared<MockTranslator>(MockOptions{});
  auto empty = std::make_shared<annotator::LocalAnnotator>(std::make_shared<MatchIndex>());
  Pipeline p(*store, mock, empty, FastOptions());
  p.Start();
  const auto code = store->CreateReport("MRI", "en", testing::kFixtureText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  const Report r = store->LoadReport(code);
  EXPECT_EQ(r.status, ReportStatus::kDone);
  EXPECT_TRUE(r.annotations.empty());
  EXPECT_FALSE(r.translated_text.has_value());
  EXPECT_EQ(mock->submitted_count(), 0u);
  EXPECT_TRUE(store->TranslationJobs(code).empty());
  for (const auto& rec : store->Records()) {
    EXPECT_NE(rec.kind, journal::RecordKind::kTranslationRecorded);
    if (rec.kind == journal::RecordKind::kStatusChanged) {
      EXPECT_NE(rec.payload["to"], "Translating");
    }
  }
}

TEST(PipelineTest, TranslationFailurePropagates) {
  auto store = store::Store::Open({});
  auto scripted = std::make_shared<ScriptedTranslator>();
  scripted->fail = true;
  Pipeline p(*store, scripted, FixtureAnnotator(), FastOptions());
  p.Start();
  const auto code = store->CreateReport("CT", "pt", kPtText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  const Report r = store->LoadReport(code);
  EXPECT_EQ(r.status, ReportStatus::kFailed);
  ASSERT_TRUE(r.failure_reason.has_value());
  EXPECT_NE(r.failure_reason->find("engine offline"), std::string::npos) << *r.failure_reason;
}

TEST(PipelineTest, SubmitRetriesTransportFailures) {
  auto store = store::Store::Open({});
  auto scripted = std::make_shared<ScriptedTranslator>();
  scripted->unavailable_submits = 2;
  Pipeline p(*store, scripted, FixtureAnnotator(), FastOptions());
  p.Start();
  const auto code = store->CreateReport("CT", "pt", kPtText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  EXPECT_EQ(store->LoadReport(code).status, ReportStatus::kDone);
  EXPECT_EQ(scripted->submits.load(), 3);
}

TEST(PipelineTest, AnnotatorFailurePropagates) {
  auto store = store::Store::Open({});
  Pipeline p(*store, std::make_shared<MockTranslator>(MockOptions{}),
             std::make_shared<ThrowingAnnotator>(), FastOptions());
  p.Start();
  const auto code = store->CreateReport("MRI", "en", testing::kFixtureText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  const Report r = store->LoadReport(code);
  EXPECT_EQ(r.status, ReportStatus::kFailed);
  EXPECT_NE(r.failure_reason->find("annotator unreachable"), std::string::npos);
}

TEST(PipelineTest, Reprocess) {
  auto store = store::Store::Open({});
  auto scripted = std::make_shared<ScriptedTranslator>();
  scripted->fail = true;
  Pipeline p(*store, scripted, FixtureAnnotator(), FastOptions());
  const auto code = store->CreateReport("CT", "pt", kPtText, "api").code;
  p.Run(code, "worker-x");
  ASSERT_EQ(store->LoadReport(code).status, ReportStatus::kFailed);

  scripted->fail = false;
  p.Reprocess(code);
  const Report reset = store->LoadReport(code);
  EXPECT_EQ(reset.status, ReportStatus::kReceived);
  EXPECT_FALSE(reset.translated_text.has_value());
  EXPECT_FALSE(reset.failure_reason.has_value());
  EXPECT_TRUE(reset.annotations.empty());

  p.Start();
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  EXPECT_EQ(store->LoadReport(code).status, ReportStatus::kDone);

  try {
    p.Reprocess(code);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotFailed);
  }
  try {
    p.Reprocess(999);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownReport);
  }
  ExpectLegalPaths(store->Records());
}

TEST(PipelineTest, StallSweep) {
  Timestamp now = Now();
  store::StoreOptions opts;
  opts.clock = [&] { return now; };
  auto store = store::Store::Open(opts);
  PipelineOptions po = FastOptions();
  po.stall_timeout = 15min;
  Pipeline p(*store, std::make_shared<MockTranslator>(MockOptions{}), FixtureAnnotator(), po);

  const auto translating = store->CreateReport("CT", "pt", kPtText, "api").code;
  store->Transition(translating, event::Start{}, "worker-dead");
  const auto annotating = store->CreateReport("CT", "en", kPtText, "api").code;
  store->Transition(annotating, event::Start{}, "worker-dead");
  const auto received = store->CreateReport("CT", "en", kPtText, "api").code;

  EXPECT_EQ(p.SweepStalled(), 0u);
  now += 14min;
  EXPECT_EQ(p.SweepStalled(), 0u);
  now += 2min;
  EXPECT_EQ(p.SweepStalled(), 2u);
  EXPECT_EQ(store->LoadReport(translating).status, ReportStatus::kFailed);
  EXPECT_EQ(store->LoadReport(translating).failure_reason, "stalled");
  EXPECT_EQ(store->LoadReport(annotating).failure_reason, "stalled");
  EXPECT_EQ(store->LoadReport(received).status, ReportStatus::kReceived);

  // The Received report was handed to the queue; workers finish it.
  p.Start();
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  EXPECT_EQ(store->LoadReport(received).status, ReportStatus::kDone);
}

TEST(PipelineTest, ResumesAfterRestart) {
  testing::TempDir dir;
  store::StoreOptions opts;
  opts.journal_path = dir.path() / "journal.ndjson";
  opts.sync_writes = false;
  std::int64_t a, b, c;
  {
    auto store = store::Store::Open(opts);
    a = store->CreateReport("CT", "pt", kPtText, "api").code;
    store->Transition(a, event::Start{}, "worker-0@old");
    b = store->CreateReport("CT", "pt", kPtText, "api").code;
    store->Transition(b, event::Start{}, "worker-1@old");
    store->Transition(b, event::TranslationSucceeded{"chest pleural effusion"}, "worker-1@old");
    c = store->CreateReport("CT", "en", kPtText, "api").code;
  }
  auto store = store::Store::Open(opts);
  Pipeline p(*store, std::make_shared<MockTranslator>(MockOptions{}), FixtureAnnotator(),
             FastOptions());
  p.Start();
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  for (auto code : {a, b, c}) EXPECT_EQ(store->LoadReport(code).status, ReportStatus::kDone);
  EXPECT_EQ(store->LoadReport(b).annotations.size(), 2u);
  ExpectLegalPaths(store->Records());
}

TEST(PipelinePropertyTest, LivenessAndLegalPathsAtDeskScale) {
  auto store = store::Store::Open({});
  auto scripted = std::make_shared<ScriptedTranslator>();
  Pipeline p(*store, scripted, FixtureAnnotator(), FastOptions());
  p.Start();
  const auto start = std::chrono::steady_clock::now();
  const char* langs[] = {"pt", "en", "es", "fr", "de", "it"};
  for (int i = 0; i < 30; ++i) {
    scripted->fail = i % 7 == 3;
    p.Enqueue(store->CreateReport("CT", langs[i % 6], kPtText, "api").code);
  }
  ASSERT_TRUE(testing::WaitFor([&] { return AllTerminal(*store); }, 5s));
  EXPECT_LT(std::chrono::steady_clock::now() - start, 5s);
  EXPECT_TRUE(p.WaitIdle(1s));
  ExpectLegalPaths(store->Records());
  EXPECT_EQ(StateToJson(store::Recover("/nonexistent").state).size(), 4u);
}

TEST(PipelineTest, StopLeavesStateResumable) {
  auto store = store::Store::Open({});
  MockOptions slow;
  slow.latency = 10s;
  Pipeline p(*store, std::make_shared<MockTranslator>(slow), FixtureAnnotator(), FastOptions());
  p.Start();
  const auto code = store->CreateReport("CT", "pt", kPtText, "api").code;
  p.Enqueue(code);
  ASSERT_TRUE(testing::WaitFor(
      [&] { return store->LoadReport(code).status == ReportStatus::kTranslating; }, 2s));
  const auto t0 = std::chrono::steady_clock::now();
  p.Stop();
  EXPECT_LT(std::chrono::steady_clock::now() - t0, 2s);
  EXPECT_EQ(store->LoadReport(code).status, ReportStatus::kTranslating);
}

}  // namespace
}  // namespace mra::pipeline
