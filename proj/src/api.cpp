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

#include <charconv>

#include <spdlog/spdlog.h>

#include "httplib.h"
#include "mra/journal.hpp"

namespace mra::api {
namespace {

using nlohmann::json;

constexpr std::size_t kMaxRequestBytes = 64u << 20;

void SendJson(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void SendError(httplib::Response& res, const ApiError& error) {
  SendJson(res, error.http_status, {{"code", error.code}, {"message", error.message}});
}

std::optional<std::int64_t> ParseCode(const std::string& s) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || value <= 0) return std::nullopt;
  return value;
}

json NullableString(const std::optional<std::string>& s) {
  return s ? json(*s) : json(nullptr);
}

struct Upload {
  std::optional<std::string> category;
  std::optional<std::string> language;
  std::optional<std::string> text;
};

Upload ReadUpload(const httplib::Request& req) {
  Upload upload;
  if (req.is_multipart_form_data()) {
    const auto field = [&](const char* name) -> std::optional<std::string> {
      if (!req.has_file(name)) return std::nullopt;
      return req.get_file_value(name).content;
    };
    upload.category = field("category");
    upload.language = field("language");
    upload.text = field("file");
    if (!upload.text) upload.text = field("text");
    return upload;
  }
  if (req.get_header_value("Content-Type").rfind("application/json", 0) == 0) {
    const json doc = json::parse(req.body, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
      throw Error(ErrorCode::kMalformedPayload, "request body is not a JSON object");
    }
    const auto field = [&](const char* name) -> std::optional<std::string> {
      if (!doc.contains(name)) return std::nullopt;
      if (!doc[name].is_string()) {
        throw Error(ErrorCode::kMalformedPayload, std::string(name) + " must be a string");
      }
      return doc[name].get<std::string>();
    };
    upload.category = field("category");
    upload.language = field("language");
    upload.text = field("text");
    return upload;
  }
  const auto param = [&](const char* name) -> std::optional<std::string> {
    if (!req.has_param(name)) return std::nullopt;
    return req.get_param_value(name);
  };
  upload.category = param("category");
  upload.language = param("language");
  upload.text = param("text");
  return upload;
}

}  // namespace

ApiError ToApiError(const Error& error) {
  const std::string message = error.what();
  switch (error.code()) {
    case ErrorCode::kUnsupportedLanguage: return {400, "unsupported_language", message};
    case ErrorCode::kEmptyText: return {400, "empty_text", message};
    case ErrorCode::kTooLarge: return {413, "too_large", message};
    case ErrorCode::kInvalidEncoding: return {415, "unsupported_encoding", message};
    case ErrorCode::kUnknownReport: return {404, "unknown_report", message};
    case ErrorCode::kUnknownTerm: return {404, "unknown_term", message};
    case ErrorCode::kNotFailed: return {409, "not_failed", message};
    case ErrorCode::kMalformedPayload: return {400, "bad_request", message};
    default: return {500, "internal", message};
  }
}

json SummaryToJson(const store::ReportSummary& s) {
  return {{"code", s.code},
          {"category", s.category},
          {"original_language", s.original_language.str()},
          {"created_at", FormatTimestamp(s.created_at)},
          {"date", FormatMinute(s.created_at)},
          {"processed", s.processed},
          {"status", StatusName(s.status)}};
}

json AnnotationsToJson(const Report& report) {
  json list = json::array();
  for (const auto& a : report.annotations) list.push_back(journal::AnnotationToJson(a));
  return list;
}

json ReportToJson(const Report& r, const std::vector<translator::TranslationJob>& jobs) {
  json job_list = json::array();
  for (const auto& job : jobs) {
    job_list.push_back({{"job_id", job.job_id}, {"state", translator::JobStateName(job.state)}});
  }
  return {{"code", r.code},
          {"category", r.category},
          {"original_language", r.original_language.str()},
          {"created_at", FormatTimestamp(r.created_at)},
          {"date", FormatMinute(r.created_at)},
          {"processed", r.processed()},
          {"status", StatusName(r.status)},
          {"original_text", r.original_text},
          {"translated_text", NullableString(r.translated_text)},
          {"failure_reason", NullableString(r.failure_reason)},
          {"annotated_field", r.translated_text ? "translated_text" : "original_text"},
          {"offset_unit", "scalar"},
          {"annotations", AnnotationsToJson(r)},
          {"translation_jobs", std::move(job_list)}};
}

json TermToJson(const lexicon::LexiconTerm& term) {
  return {{"id", term.id},
          {"preferred_label", term.preferred_label},
          {"synonyms", term.synonyms},
          {"parent_id", NullableString(term.parent_id)}};
}

struct ApiServer::Impl {
  Service& service;
  httplib::Server server;

  explicit Impl(Service& s) : service(s) {
    server.set_payload_max_length(kMaxRequestBytes);
    Routes();
  }

  // Wraps a handler so that library errors become {code, message} bodies.
  template <class F>
  httplib::Server::Handler Guard(F handler) {
    return [handler](const httplib::Request& req, httplib::Response& res) {
      try {
        handler(req, res);
      } catch (const Error& e) {
        SendError(res, ToApiError(e));
      } catch (const std::exception& e) {
        spdlog::error("{} {}: {}", req.method, req.path, e.what());
        SendError(res, {500, "internal", "internal error"});
      }
    };
  }

  std::int64_t CodeParam(const httplib::Request& req) {
    const auto code = ParseCode(req.matches[1]);
    if (!code) throw Error(ErrorCode::kUnknownReport, "unknown report " + std::string(req.matches[1]));
    return *code;
  }

  void Routes() {
    server.Post("/reports", Guard([this](const httplib::Request& req, httplib::Response& res) {
      const Upload upload = ReadUpload(req);
      if (!upload.language) {
        throw Error(ErrorCode::kMalformedPayload, "missing field 'language'");
      }
      if (!upload.text) throw Error(ErrorCode::kMalformedPayload, "missing field 'file' or 'text'");
      const Report report =
          service.store->CreateReport(upload.category.value_or(""), *upload.language,
                                      *upload.text, service.pipeline->api_owner());
      service.pipeline->Enqueue(report.code);
      SendJson(res, 201, {{"code", report.code}});
    }));

    server.Get("/reports", Guard([this](const httplib::Request&, httplib::Response& res) {
      json list = json::array();
      for (const auto& s : service.store->ListReports()) list.push_back(SummaryToJson(s));
      SendJson(res, 200, list);
    }));

    server.Get(R"(/reports/([^/]+))", Guard([this](const httplib::Request& req,
                                                   httplib::Response& res) {
      const Report report = service.store->LoadReport(CodeParam(req));
      SendJson(res, 200, ReportToJson(report, service.store->TranslationJobs(report.code)));
    }));

    server.Get(R"(/reports/([^/]+)/annotations)",
               Guard([this](const httplib::Request& req, httplib::Response& res) {
                 const Report report = service.store->LoadReport(CodeParam(req));
                 SendJson(res, 200,
                          {{"code", report.code},
                           {"status", StatusName(report.status)},
                           {"offset_unit", "scalar"},
                           {"annotations", AnnotationsToJson(report)}});
               }));

    server.Post(R"(/reports/([^/]+)/reprocess)",
                Guard([this](const httplib::Request& req, httplib::Response& res) {
                  const std::int64_t code = CodeParam(req);
                  service.pipeline->Reprocess(code);
                  SendJson(res, 202, {{"code", code}, {"status", "Received"}});
                }));

    server.Get(R"(/terms/([^/]+))", Guard([this](const httplib::Request& req,
                                                 httplib::Response& res) {
      SendJson(res, 200, TermToJson(lexicon::LookupTerm(*service.lexicon, req.matches[1].str())));
    }));

    server.Get("/health", Guard([this](const httplib::Request&, httplib::Response& res) {
      SendJson(res, 200,
               {{"status", "ok"},
                {"translator", service.translator->name()},
                {"annotator", service.annotator->name()},
                {"lexicon_terms", service.lexicon->size()},
                {"workers", service.config.workers}});
    }));

    if (!service.config.ui_dir.empty() && !server.set_mount_point("/", service.config.ui_dir)) {
      spdlog::warn("MRA_UI_DIR {} is not a directory; UI not served", service.config.ui_dir);
    }

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
      if (res.status == 404) {
        SendError(res, {404, "not_found", "no such resource"});
      } else if (res.status == 413) {
        SendError(res, {413, "too_large", "request body too large"});
      } else {
        SendError(res, {res.status, res.status >= 500 ? "internal" : "bad_request",
                        httplib::status_message(res.status)});
      }
      return httplib::Server::HandlerResponse::Handled;
    });
  }
};

ApiServer::ApiServer(Service& service) : impl_(std::make_unique<Impl>(service)) {}

ApiServer::~ApiServer() { Stop(); }

int ApiServer::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool ApiServer::Serve() { return impl_->server.listen_after_bind(); }

void ApiServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool ApiServer::running() const { return impl_->server.is_running(); }

}  // namespace mra::api
