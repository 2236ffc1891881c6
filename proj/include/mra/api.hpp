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

#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"
#include "mra/error.hpp"
#include "mra/service.hpp"

namespace mra::api {

// Body of every error response: exactly {code, message}.
struct ApiError {
  int http_status = 500;
  std::string code;
  std::string message;
};

// Machine codes: bad_request, unsupported_language, empty_text, too_large,
// unsupported_encoding, unknown_report, unknown_term, not_failed, not_found,
// internal.
ApiError ToApiError(const Error& error);

nlohmann::json SummaryToJson(const store::ReportSummary& summary);
nlohmann::json ReportToJson(const Report& report,
                            const std::vector<translator::TranslationJob>& jobs);
nlohmann::json AnnotationsToJson(const Report& report);
nlohmann::json TermToJson(const lexicon::LexiconTerm& term);

// HTTP front end over a Service. Handlers only read the store and enqueue
// pipeline work; nothing long-running happens on a request thread.
class ApiServer {
 public:
  explicit ApiServer(Service& service);
  ~ApiServer();

  // Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int Bind(const std::string& host, int port);
  // Serves until Stop(). Call after Bind.
  bool Serve();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mra::api
