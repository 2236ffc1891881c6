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
#include <string>
#include <string_view>

#include "json.hpp"

// Conventions shared by the remote adapters: a base URL that may carry a path
// prefix, bearer-token auth and JSON bodies in both directions.
namespace mra::http {

struct JsonResponse {
  int status = 0;
  std::string body;
};

struct BaseUrl {
  std::string origin;  // scheme://host[:port]
  std::string prefix;  // path without trailing slash, possibly empty
};

// Throws Config for URLs without a scheme or host.
BaseUrl ParseBaseUrl(std::string_view url);

class JsonClient {
 public:
  JsonClient(std::string_view base_url, std::string api_key, std::chrono::milliseconds timeout);

  // Both throw BackendUnavailable on transport failure.
  JsonResponse Post(std::string_view path, const nlohmann::json& body) const;
  JsonResponse Get(std::string_view path) const;

 private:
  BaseUrl base_;
  std::string api_key_;
  std::chrono::milliseconds timeout_;
};

}  // namespace mra::http
