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

#include "http_util.hpp"

#include "httplib.h"
#include "mra/error.hpp"

namespace mra::http {
namespace {

httplib::Headers AuthHeaders(const std::string& key) {
  httplib::Headers headers;
  if (!key.empty()) headers.emplace("Authorization", "Bearer " + key);
  return headers;
}

void Configure(httplib::Client& client, std::chrono::milliseconds timeout) {
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
}

[[noreturn]] void Unavailable(const std::string& origin, httplib::Error error) {
  throw Error(ErrorCode::kBackendUnavailable,
              "request to " + origin + " failed: " + httplib::to_string(error));
}

}  // namespace

BaseUrl ParseBaseUrl(std::string_view url) {
  const std::size_t scheme_end = url.find("://");
  if (scheme_end == std::string_view::npos || scheme_end == 0 ||
      scheme_end + 3 >= url.size()) {
    throw Error(ErrorCode::kConfig, "invalid base URL '" + std::string(url) + "'");
  }
  const std::size_t path_start = url.find('/', scheme_end + 3);
  BaseUrl base;
  base.origin = std::string(url.substr(0, path_start));
  if (path_start != std::string_view::npos) {
    std::string_view prefix = url.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.remove_suffix(1);
    base.prefix = std::string(prefix);
  }
  return base;
}

JsonClient::JsonClient(std::string_view base_url, std::string api_key,
                       std::chrono::milliseconds timeout)
    : base_(ParseBaseUrl(base_url)), api_key_(std::move(api_key)), timeout_(timeout) {}

JsonResponse JsonClient::Post(std::string_view path, const nlohmann::json& body) const {
  httplib::Client client(base_.origin);
  Configure(client, timeout_);
  auto result = client.Post(base_.prefix + std::string(path), AuthHeaders(api_key_), body.dump(),
                            "application/json");
  if (!result) Unavailable(base_.origin, result.error());
  return JsonResponse{result->status, result->body};
}

JsonResponse JsonClient::Get(std::string_view path) const {
  httplib::Client client(base_.origin);
  Configure(client, timeout_);
  auto result = client.Get(base_.prefix + std::string(path), AuthHeaders(api_key_));
  if (!result) Unavailable(base_.origin, result.error());
  return JsonResponse{result->status, result->body};
}

}  // namespace mra::http
