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

#include "mra/service.hpp"

#include <spdlog/spdlog.h>

namespace mra {

Service::~Service() {
  if (pipeline) pipeline->Stop();
}

std::unique_ptr<Service> BuildService(const Config& config, ServiceOverrides overrides) {
  auto service = std::make_unique<Service>();
  service->config = config;

  auto lex = std::make_shared<lexicon::Lexicon>(lexicon::LoadLexiconFile(config.lexicon_path));
  service->index = std::make_shared<const MatchIndex>(MatchIndex::Build(*lex));
  service->lexicon = std::move(lex);

  store::StoreOptions store_options;
  store_options.journal_path = config.journal_path();
  store_options.languages = config.languages;
  if (overrides.clock) store_options.clock = overrides.clock;
  if (overrides.sync_writes) store_options.sync_writes = *overrides.sync_writes;
  service->store = store::Store::Open(std::move(store_options));
  if (service->store->discarded_on_open() > 0) {
    spdlog::warn("journal recovery discarded {} trailing line(s)",
                 service->store->discarded_on_open());
  }

  if (overrides.translator) {
    service->translator = std::move(overrides.translator);
  } else if (config.translator == "remote") {
    service->translator = std::make_shared<translator::RemoteTranslator>(
        translator::RemoteTranslatorOptions{config.translation_url, config.translation_key,
                                            config.languages});
  } else {
    translator::MockOptions mock;
    mock.latency = config.mock_latency;
    mock.languages = config.languages;
    if (!config.phrase_table.empty()) {
      for (auto& [lang, table] : translator::LoadPhraseTables(config.phrase_table)) {
        auto& target = mock.phrase_tables[lang];
        target.insert(target.end(), table.begin(), table.end());
      }
    }
    service->translator = std::make_shared<translator::MockTranslator>(std::move(mock));
  }

  if (overrides.annotator) {
    service->annotator = std::move(overrides.annotator);
  } else if (config.annotator == "remote") {
    service->annotator = std::make_shared<annotator::RemoteAnnotator>(
        annotator::RemoteEndpoint{config.annotator_url, config.annotator_key});
  } else {
    service->annotator = std::make_shared<annotator::LocalAnnotator>(service->index);
  }

  pipeline::PipelineOptions pipeline_options;
  pipeline_options.workers = config.workers;
  pipeline_options.poll_interval = config.poll_interval;
  pipeline_options.stall_timeout = config.stall_timeout;
  pipeline_options.instance_id = overrides.instance_id;
  if (overrides.janitor_interval) pipeline_options.janitor_interval = *overrides.janitor_interval;
  service->pipeline = std::make_unique<pipeline::Pipeline>(
      *service->store, service->translator, service->annotator, pipeline_options);
  return service;
}

}  // namespace mra
