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

#include "mra/api.hpp"

#include <gtest/gtest.h>

#include "api_harness.hpp"
#include "mra/cli.hpp"
#include "oracle.hpp"

namespace mra::api {
namespace {

using namespace std::chrono_literals;
using nlohmann::json;
using testing::ApiHarness;

bool IsErrorBody(const std::string& body, const std::string& code) {
  const json doc = json::parse(body, nullptr, false);
  if (!doc.is_object() || doc.size() != 2 || !doc.contains("code") || !doc.contains("message")) {
    return false;
  }
  return doc["code"] == code && doc["message"].is_string();
}

std::string WaitStatus(ApiHarness& h, std::int64_t code, std::initializer_list<const char*> want) {
  std::string status;
  testing::WaitFor(
      [&] {
        status = h.GetJson("/reports/" + std::to_string(code))["status"].get<std::string>();
        for (const char* w : want) {
          if (status == w) return true;
        }
        return false;
      },
      5s);
  return status;
}

TEST(ApiTest, UploadRespondsImmediatelyAndProgresses) {
  Config config = ApiHarness::DefaultConfig();
  config.mock_latency = 30s;
  ApiHarness h(config);
  const auto start = std::chrono::steady_clock::now();
  auto res = h.PostJson("/reports", {{"category", "Ultrasound"},
                                     {"language", "pt"},
                                     {"text", "Ecografia mostra derrame pleural."}});
  ASSERT_TRUE(res);
  EXPECT_LT(std::chrono::steady_clock::now() - start, 500ms);
  ASSERT_EQ(res->status, 201);
  const auto code = json::parse(res->body)["code"].get<std::int64_t>();
  EXPECT_EQ(code, 1);
  const std::string status = h.GetJson("/reports/1")["status"];
  EXPECT_TRUE(status == "Received" || status == "Translating") << status;
}

TEST(ApiTest, MultipartAndFormUploads) {
  ApiHarness h(ApiHarness::DefaultConfig());
  httplib::MultipartFormDataItems items = {
      {"category", "CT", "", ""},
      {"language", "en", "", ""},
      {"file", "Chest X-ray shows pleural effusion.", "report.txt", "text/plain"}};
  auto res = h.client().Post("/reports", items);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201) << res->body;

  httplib::Params params{{"category", "CT"}, {"language", "en"}, {"text", "chest"}};
  res = h.client().Post("/reports", params);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201) << res->body;
}

TEST(ApiTest, EnglishReportNeverTranslates) {
  ApiHarness h(ApiHarness::DefaultConfig());
  const auto code = h.Upload("MRI", "en", testing::kFixtureText);
  ASSERT_GT(code, 0);
  EXPECT_EQ(WaitStatus(h, code, {"Done", "Failed"}), "Done");
  const json report = h.GetJson("/reports/" + std::to_string(code));
  EXPECT_TRUE(report["translation_jobs"].empty());
  EXPECT_TRUE(report["translated_text"].is_null());
  EXPECT_EQ(report["annotated_field"], "original_text");
  for (const auto& r : h.service().store->Records()) {
    if (r.kind == journal::RecordKind::kStatusChanged) EXPECT_NE(r.payload["to"], "Translating");
  }
}

TEST(ApiTest, ErrorContract) {
  ApiHarness h(ApiHarness::DefaultConfig());
  struct Case {
    json body;
    int status;
    const char* code;
  };
  const std::vector<Case> cases = {
      {{{"category", "CT"}, {"language", "xx"}, {"text", "t"}}, 400, "unsupported_language"},
      {{{"category", "CT"}, {"language", "pt"}, {"text", ""}}, 400, "empty_text"},
      {{{"category", "CT"}, {"language", "pt"}, {"text", std::string(2 << 20, 'a')}}, 413,
       "too_large"},
      {{{"category", "CT"}, {"text", "t"}}, 400, "bad_request"},
      {{{"category", "CT"}, {"language", "pt"}}, 400, "bad_request"},
      {{{"category", "CT"}, {"language", 5}, {"text", "t"}}, 400, "bad_request"},
  };
  for (const auto& c : cases) {
    auto res = h.PostJson("/reports", c.body);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, c.status) << c.code;
    EXPECT_TRUE(IsErrorBody(res->body, c.code)) << res->body;
  }

  auto res = h.client().Post("/reports", "{\"language\":\"pt\",\"text\":\"bad \xff\"}",
                             "application/json");
  ASSERT_TRUE(res);
  // A JSON string cannot carry raw invalid bytes.
  EXPECT_EQ(res->status, 400);
  EXPECT_TRUE(IsErrorBody(res->body, "bad_request")) << res->body;

  httplib::MultipartFormDataItems items = {{"language", "pt", "", ""},
                                           {"file", "bad \xff bytes", "r.txt", "text/plain"}};
  res = h.client().Post("/reports", items);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 415);
  EXPECT_TRUE(IsErrorBody(res->body, "unsupported_encoding")) << res->body;

  res = h.client().Post("/reports", "{not json", "application/json");
  EXPECT_EQ(res->status, 400);
  EXPECT_TRUE(IsErrorBody(res->body, "bad_request"));

  for (const char* path : {"/reports/999", "/reports/abc", "/reports/0", "/reports/999/annotations"}) {
    res = h.client().Get(path);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 404) << path;
    EXPECT_TRUE(IsErrorBody(res->body, "unknown_report")) << res->body;
  }
  res = h.client().Get("/terms/RID999");
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(IsErrorBody(res->body, "unknown_term"));
  res = h.client().Post("/reports/999/reprocess");
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(IsErrorBody(res->body, "unknown_report"));
  res = h.client().Get("/no/such/route");
  EXPECT_EQ(res->status, 404);
  EXPECT_TRUE(IsErrorBody(res->body, "not_found")) << res->body;
}

TEST(ApiTest, ErrorCodeMappingIsExhaustive) {
  const std::map<ErrorCode, std::pair<int, std::string>> expected = {
      {ErrorCode::kUnsupportedLanguage, {400, "unsupported_language"}},
      {ErrorCode::kEmptyText, {400, "empty_text"}},
      {ErrorCode::kTooLarge, {413, "too_large"}},
      {ErrorCode::kInvalidEncoding, {415, "unsupported_encoding"}},
      {ErrorCode::kUnknownReport, {404, "unknown_report"}},
      {ErrorCode::kUnknownTerm, {404, "unknown_term"}},
      {ErrorCode::kNotFailed, {409, "not_failed"}},
      {ErrorCode::kMalformedPayload, {400, "bad_request"}},
  };
  for (int i = 0; i <= static_cast<int>(ErrorCode::kIo); ++i) {
    const auto code = static_cast<ErrorCode>(i);
    const ApiError e = ToApiError(Error(code, "m"));
    auto it = expected.find(code);
    if (it == expected.end()) {
      EXPECT_EQ(e.http_status, 500) << ErrorCodeName(code);
      EXPECT_EQ(e.code, "internal");
    } else {
      EXPECT_EQ(e.http_status, it->second.first) << ErrorCodeName(code);
      EXPECT_EQ(e.code, it->second.second);
    }
    EXPECT_EQ(e.message, "m");
  }
}

TEST(ApiTest, DoneReportDetailAndAnnotations) {
  ApiHarness h(ApiHarness::DefaultConfig());
  const auto code = h.Upload("US", "pt", "Radiografia de tórax mostra derrame pleural.");
  ASSERT_EQ(WaitStatus(h, code, {"Done", "Failed"}), "Done");
  const json report = h.GetJson("/reports/" + std::to_string(code));
  EXPECT_EQ(report["offset_unit"], "scalar");
  EXPECT_EQ(report["annotated_field"], "translated_text");
  EXPECT_EQ(report["processed"], true);
  EXPECT_TRUE(report["failure_reason"].is_null());
  ASSERT_EQ(report["translation_jobs"].size(), 1u);
  EXPECT_EQ(report["translation_jobs"][0]["state"], "succeeded");

  const std::string translated = report["translated_text"];
  std::vector<lexicon::LexiconTerm> terms;
  for (const auto& [id, t] : h.service().lexicon->terms()) terms.push_back(t);
  const auto expected = oracle::Annotate(translated, terms);
  const json anns = h.GetJson("/reports/" + std::to_string(code) + "/annotations");
  EXPECT_EQ(anns["offset_unit"], "scalar");
  ASSERT_EQ(anns["annotations"].size(), expected.size());
  ASSERT_GE(expected.size(), 1u);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const json& a = anns["annotations"][i];
    EXPECT_EQ(a["term_id"], expected[i].term_id);
    EXPECT_EQ(a["start"], expected[i].start);
    EXPECT_EQ(a["end"], expected[i].end);
    EXPECT_EQ(a["matched_text"], expected[i].matched_text);
  }
  EXPECT_EQ(report["annotations"], anns["annotations"]);
}

TEST(ApiTest, TermsHealthAndReprocess) {
  ApiHarness h(ApiHarness::DefaultConfig());
  const json term = h.GetJson("/terms/RID2");
  EXPECT_EQ(term["preferred_label"], "effusion");
  const json term1 = h.GetJson("/terms/RID1");
  EXPECT_EQ(term1["preferred_label"], "pleural effusion");

  const json health = h.GetJson("/health");
  EXPECT_EQ(health["status"], "ok");
  EXPECT_EQ(health["translator"], "mock");
  EXPECT_EQ(health["annotator"], "local");
  EXPECT_EQ(health["lexicon_terms"], 3);

  const auto code = h.Upload("MRI", "en", testing::kFixtureText);
  ASSERT_EQ(WaitStatus(h, code, {"Done"}), "Done");
  auto res = h.client().Post("/reports/" + std::to_string(code) + "/reprocess");
  EXPECT_EQ(res->status, 409);
  EXPECT_TRUE(IsErrorBody(res->body, "not_failed"));
}

TEST(ApiTest, ReprocessFailedReport) {
  Config config = ApiHarness::DefaultConfig();
  ServiceOverrides overrides;
  translator::MockOptions failing;
  failing.fail_reason = "engine offline";
  overrides.translator = std::make_shared<translator::MockTranslator>(failing);
  ApiHarness h(config, overrides);
  const auto code = h.Upload("CT", "pt", "derrame pleural");
  ASSERT_EQ(WaitStatus(h, code, {"Done", "Failed"}), "Failed");
  EXPECT_NE(h.GetJson("/reports/" + std::to_string(code))["failure_reason"].get<std::string>().find(
                "engine offline"),
            std::string::npos);
  auto res = h.client().Post("/reports/" + std::to_string(code) + "/reprocess");
  EXPECT_EQ(res->status, 202);
  EXPECT_EQ(WaitStatus(h, code, {"Failed"}), "Failed");
  int reprocessed = 0;
  for (const auto& r : h.service().store->Records()) {
    if (r.kind == journal::RecordKind::kStatusChanged && r.payload["event"] == "Reprocess") {
      ++reprocessed;
    }
  }
  EXPECT_EQ(reprocessed, 1);
}

TEST(ApiTest, HealthNeverLeaksKeys) {
  Config config = ApiHarness::DefaultConfig();
  config.annotator = "remote";
  config.annotator_url = "http://127.0.0.1:1";
  config.annotator_key = "super-secret-annotator-key";
  config.translator = "remote";
  config.translation_url = "http://127.0.0.1:1";
  config.translation_key = "super-secret-translation-key";
  ApiHarness h(config, {}, false);
  auto res = h.client().Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->body.find("super-secret"), std::string::npos);
  EXPECT_EQ(json::parse(res->body)["annotator"], "remote");
}

TEST(ApiTest, IdempotentReads) {
  ApiHarness h(ApiHarness::DefaultConfig());
  const auto code = h.Upload("MRI", "en", testing::kFixtureText);
  ASSERT_EQ(WaitStatus(h, code, {"Done"}), "Done");
  for (const std::string path : {"/reports", "/reports/1", "/reports/1/annotations", "/terms/RID1"}) {
    auto a = h.client().Get(path);
    auto b = h.client().Get(path);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->body, b->body) << path;
  }
}

TEST(ApiTest, ListMirrorsStoreOrdering) {
  ApiHarness h(ApiHarness::DefaultConfig(), {}, false);
  for (int i = 0; i < 5; ++i) h.Upload("CT", i % 2 ? "en" : "pt", "text");
  const json list = h.GetJson("/reports");
  const auto summaries = h.service().store->ListReports();
  ASSERT_EQ(list.size(), summaries.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    EXPECT_EQ(list[i], SummaryToJson(summaries[i]));
    EXPECT_EQ(list[i].size(), 7u);
  }
}

TEST(ApiTest, ServesStaticUi) {
  testing::TempDir ui;
  ui.Write("index.html", "<html>ui</html>");
  Config config = ApiHarness::DefaultConfig();
  config.ui_dir = ui.path().string();
  ApiHarness h(config, {}, false);
  auto res = h.client().Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "<html>ui</html>");
  EXPECT_EQ(h.GetJson("/health")["status"], "ok");
}

TEST(ApiTest, CliAndApiAgree) {
  ApiHarness h(ApiHarness::DefaultConfig());
  oracle::FixtureGenerator gen(53);
  testing::TempDir dir;
  const auto lexicon = dir.Write("lex.tsv", testing::kFixtureLexicon);
  for (int i = 0; i < 5; ++i) {
    const std::string text = gen.Text(200) + " pleural effusion. Chest";
    const auto code = h.Upload("CT", "en", text);
    ASSERT_EQ(WaitStatus(h, code, {"Done"}), "Done");
    const json anns = h.GetJson("/reports/" + std::to_string(code) + "/annotations")["annotations"];

    const auto input = dir.Write("in.txt", text);
    const std::string lex_arg = lexicon.string();
    const std::string in_arg = input.string();
    const char* argv[] = {"mra", "annotate", "--lexicon", lex_arg.c_str(), "--in", in_arg.c_str(),
                          "--format", "ndjson"};
    std::ostringstream out, err;
    ASSERT_EQ(cli::Run(8, argv, out, err), 0) << err.str();
    std::istringstream lines(out.str());
    json from_cli = json::array();
    for (std::string line; std::getline(lines, line);) from_cli.push_back(json::parse(line));
    ASSERT_EQ(from_cli.size(), anns.size());
    for (std::size_t k = 0; k < anns.size(); ++k) {
      for (const char* field : {"term_id", "start", "end", "matched_text"}) {
        EXPECT_EQ(from_cli[k][field], anns[k][field]) << field;
      }
    }
  }
}

}  // namespace
}  // namespace mra::api
