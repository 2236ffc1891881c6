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

#include <functional>
#include <memory>

#include "mra/annotator.hpp"
#include "mra/config.hpp"
#include "mra/lexicon.hpp"
#include "mra/match_index.hpp"
#include "mra/pipeline.hpp"
#include "mra/store.hpp"
#include "mra/translator.hpp"

namespace mra {

// Backends and knobs that tests substitute; anything left empty is built
// from the Config.
struct ServiceOverrides {
  std::shared_ptr<translator::TranslationBackend> translator;
  std::shared_ptr<annotator::AnnotatorBackend> annotator;
  std::function<Timestamp()> clock;
  std::optional<bool> sync_writes;
  std::optional<std::chrono::milliseconds> janitor_interval;
  std::string instance_id;
};

// Everything `mra serve` wires together. Members are declared in dependency
// order so destruction stops the pipeline before the store goes away.
struct Service {
  Config config;
  std::shared_ptr<const lexicon::Lexicon> lexicon;
  std::shared_ptr<const MatchIndex> index;
  std::unique_ptr<store::Store> store;
  std::shared_ptr<translator::TranslationBackend> translator;
  std::shared_ptr<annotator::AnnotatorBackend> annotator;
  std::unique_ptr<pipeline::Pipeline> pipeline;

  ~Service();
};

// Loads the lexicon (lexicon errors propagate with their own codes), opens
// the journal and constructs the backends. The pipeline is not started.
std::unique_ptr<Service> BuildService(const Config& config, ServiceOverrides overrides = {});

}  // namespace mra
