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
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "mra/language.hpp"

namespace mra {

// Service configuration, read from MRA_* environment variables.
struct Config {
  std::string translator = "mock";  // MRA_TRANSLATOR: mock | remote
  std::string translation_url;      // MRA_TRANSLATION_URL
  std::string translation_key;      // MRA_TRANSLATION_KEY
  std::chrono::milliseconds mock_latency{0};  // MRA_MOCK_LATENCY_SECS, 0..120
  std::string phrase_table;                   // MRA_PHRASE_TABLE (optional TSV)
  LanguageSet languages = LanguageSet::Default();  // MRA_LANGS

  std::size_t workers = 4;                            // MRA_WORKERS
  std::chrono::milliseconds poll_interval{2000};      // MRA_POLL_SECS
  std::chrono::milliseconds stall_timeout{std::chrono::minutes(15)};  // MRA_STALL_MINS

  std::filesystem::path data_dir = "mra_data";  // MRA_DATA_DIR
  std::string bind_host = "127.0.0.1";          // MRA_BIND host part
  int bind_port = 8080;                         // MRA_BIND port part

  std::string lexicon_path;         // MRA_LEXICON (required)
  std::string annotator = "local";  // MRA_ANNOTATOR: local | remote
  std::string annotator_url;        // MRA_ANNOTATOR_URL
  std::string annotator_key;        // MRA_ANNOTATOR_KEY
  std::string ui_dir;               // MRA_UI_DIR (optional)

  using Lookup = std::function<std::optional<std::string>(const std::string&)>;

  // Throws Error(kConfig) whose message names the offending variable.
  static Config FromEnv(const Lookup& lookup);
  static Config FromProcessEnv();

  std::filesystem::path journal_path() const { return data_dir / "journal.ndjson"; }
};

}  // namespace mra
