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

#include "mra/config.hpp"

#include <cmath>
#include <cstdlib>

#include "mra/error.hpp"

namespace mra {
namespace {

[[noreturn]] void Bad(const std::string& var, const std::string& why) {
  throw Error(ErrorCode::kConfig, var + ": " + why);
}

double ParseNumber(const std::string& var, const std::string& value, double min, double max) {
  char* end = nullptr;
  const double v = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(v)) {
    Bad(var, "'" + value + "' is not a number");
  }
  if (v < min || v > max) {
    Bad(var, "must be between " + std::to_string(min) + " and " + std::to_string(max));
  }
  return v;
}

std::chrono::milliseconds Millis(double value, double unit_ms) {
  return std::chrono::milliseconds(static_cast<long long>(std::llround(value * unit_ms)));
}

}  // namespace

Config Config::FromEnv(const Lookup& lookup) {
  Config c;
  const auto get = [&](const char* name) -> std::optional<std::string> {
    auto v = lookup(name);
    if (v && v->empty()) return std::nullopt;
    return v;
  };

  if (auto v = get("MRA_TRANSLATOR")) c.translator = *v;
  if (c.translator != "mock" && c.translator != "remote") {
    Bad("MRA_TRANSLATOR", "expected 'mock' or 'remote', got '" + c.translator + "'");
  }
  if (auto v = get("MRA_TRANSLATION_URL")) c.translation_url = *v;
  if (auto v = get("MRA_TRANSLATION_KEY")) c.translation_key = *v;
  if (c.translator == "remote") {
    if (c.translation_url.empty()) Bad("MRA_TRANSLATION_URL", "required when MRA_TRANSLATOR=remote");
    if (c.translation_key.empty()) Bad("MRA_TRANSLATION_KEY", "required when MRA_TRANSLATOR=remote");
  }
  if (auto v = get("MRA_MOCK_LATENCY_SECS")) {
    c.mock_latency = Millis(ParseNumber("MRA_MOCK_LATENCY_SECS", *v, 0, 120), 1000);
  }
  if (auto v = get("MRA_PHRASE_TABLE")) c.phrase_table = *v;
  if (auto v = get("MRA_LANGS")) {
    try {
      c.languages = LanguageSet::FromList(*v);
    } catch (const Error& e) {
      Bad("MRA_LANGS", e.what());
    }
  }

  if (auto v = get("MRA_WORKERS")) {
    c.workers = static_cast<std::size_t>(ParseNumber("MRA_WORKERS", *v, 1, 256));
  }
  if (auto v = get("MRA_POLL_SECS")) {
    c.poll_interval = Millis(ParseNumber("MRA_POLL_SECS", *v, 0.001, 3600), 1000);
  }
  if (auto v = get("MRA_STALL_MINS")) {
    c.stall_timeout = Millis(ParseNumber("MRA_STALL_MINS", *v, 0.001, 7 * 24 * 60), 60'000);
  }

  if (auto v = get("MRA_DATA_DIR")) c.data_dir = *v;
  if (auto v = get("MRA_BIND")) {
    const auto colon = v->rfind(':');
    if (colon == std::string::npos || colon == 0) Bad("MRA_BIND", "expected host:port");
    c.bind_host = v->substr(0, colon);
    c.bind_port = static_cast<int>(ParseNumber("MRA_BIND", v->substr(colon + 1), 0, 65535));
  }

  if (auto v = get("MRA_LEXICON")) {
    c.lexicon_path = *v;
  } else {
    Bad("MRA_LEXICON", "not set; point it at a lexicon TSV file");
  }
  if (auto v = get("MRA_ANNOTATOR")) c.annotator = *v;
  if (c.annotator != "local" && c.annotator != "remote") {
    Bad("MRA_ANNOTATOR", "expected 'local' or 'remote', got '" + c.annotator + "'");
  }
  if (auto v = get("MRA_ANNOTATOR_URL")) c.annotator_url = *v;
  if (auto v = get("MRA_ANNOTATOR_KEY")) c.annotator_key = *v;
  if (c.annotator == "remote") {
    if (c.annotator_url.empty()) Bad("MRA_ANNOTATOR_URL", "required when MRA_ANNOTATOR=remote");
    if (c.annotator_key.empty()) Bad("MRA_ANNOTATOR_KEY", "required when MRA_ANNOTATOR=remote");
  }
  if (auto v = get("MRA_UI_DIR")) c.ui_dir = *v;
  return c;
}

Config Config::FromProcessEnv() {
  return FromEnv([](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    if (!v) return std::nullopt;
    return std::string(v);
  });
}

}  // namespace mra
