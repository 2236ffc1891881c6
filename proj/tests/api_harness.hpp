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
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "mra/api.hpp"
#include "mra/service.hpp"
#include "test_util.hpp"

namespace mra::testing {

// A full service (store, pipeline, HTTP server) on an ephemeral port, backed
// by a journal in a temporary directory.
class ApiHarness {
 public:
  explicit ApiHarness(Config config, ServiceOverrides overrides = {}, bool start_pipeline = true) {
    if (config.lexicon_path.empty()) {
      config.lexicon_path = dir_.Write("lexicon.tsv", kFixtureLexicon).string();
    }
    if (config.data_dir == Config().data_dir) config.data_dir = dir_.path() / "data";
    if (!overrides.sync_writes) overrides.sync_writes = false;
    service_ = BuildService(config, std::move(overrides));
    if (start_pipeline) service_->pipeline->Start();
    server_ = std::make_unique<api::ApiServer>(*service_);
    port_ = server_->Bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_->Serve(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    client_->set_read_timeout(10, 0);
    WaitFor([this] { return static_cast<bool>(client_->Get("/health")); },
            std::chrono::seconds(5));
  }

  ~ApiHarness() {
    server_->Stop();
    if (thread_.joinable()) thread_.join();
    service_->pipeline->Stop();
  }

  static Config DefaultConfig() {
    Config c;
    c.poll_interval = std::chrono::milliseconds(20);
    return c;
  }

  Service& service() { return *service_; }
  httplib::Client& client() { return *client_; }
  int port() const { return port_; }

  httplib::Result PostJson(const std::string& path, const nlohmann::json& body) {
    return client_->Post(path, body.dump(), "application/json");
  }

  // Uploads and returns the new report code, or -1.
  std::int64_t Upload(const std::string& category, const std::string& language,
                      const std::string& text) {
    auto res = PostJson("/reports", {{"category", category}, {"language", language}, {"text", text}});
    if (!res || res->status != 201) return -1;
    return nlohmann::json::parse(res->body)["code"].get<std::int64_t>();
  }

  nlohmann::json GetJson(const std::string& path) {
    auto res = client_->Get(path);
    if (!res) return nullptr;
    return nlohmann::json::parse(res->body, nullptr, false);
  }

 private:
  TempDir dir_;
  std::unique_ptr<Service> service_;
  std::unique_ptr<api::ApiServer> server_;
  int port_ = -1;
  std::thread thread_;
  std::unique_ptr<httplib::Client> client_;
};

}  // namespace mra::testing
