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

#include "mra/cli.hpp"

#include <csignal>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "mra/annotator.hpp"
#include "mra/api.hpp"
#include "mra/config.hpp"
#include "mra/journal.hpp"
#include "mra/lexicon.hpp"
#include "mra/match_index.hpp"
#include "mra/service.hpp"

namespace mra::cli {
namespace {

bool IsLexiconError(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine:
    case ErrorCode::kDuplicateId:
    case ErrorCode::kInvalidId:
    case ErrorCode::kDanglingParent:
      return true;
    default:
      return false;
  }
}

std::optional<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string data{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) return std::nullopt;
  return data;
}

int Annotate(const std::string& lexicon_path, const std::string& input_path,
             const std::string& format, std::ostream& out, std::ostream& err) {
  const auto lexicon_tsv = ReadFile(lexicon_path);
  if (!lexicon_tsv) {
    err << "error: cannot read lexicon " << lexicon_path << "\n";
    return kExitLexicon;
  }
  lexicon::Lexicon lex;
  try {
    lex = lexicon::ParseLexicon(*lexicon_tsv);
  } catch (const Error& e) {
    err << "error: " << lexicon_path << ": " << e.what() << "\n";
    return kExitLexicon;
  }
  const auto input = ReadFile(input_path);
  if (!input) {
    err << "error: cannot read input " << input_path << "\n";
    return kExitInput;
  }
  const MatchIndex index = MatchIndex::Build(lex);
  for (const auto& a : annotator::Annotate(*input, index)) {
    if (format == "ndjson") {
      out << journal::AnnotationToJson(a).dump() << "\n";
    } else {
      out << a.start << '\t' << a.end << '\t' << a.term_id << '\t' << EscapeTsv(a.matched_text)
          << "\n";
    }
  }
  return kExitOk;
}

int Validate(const std::string& path, std::ostream& out, std::ostream& err) {
  const auto tsv = ReadFile(path);
  if (!tsv) {
    err << "error: cannot read lexicon " << path << "\n";
    return kExitLexicon;
  }
  std::istringstream in(*tsv);
  bool failed = false;
  for (const auto& issue : lexicon::ValidateLexicon(in)) {
    failed |= !issue.warning;
    err << path << ":" << issue.line << ": " << (issue.warning ? "warning" : "error") << ": "
        << (issue.warning ? "" : std::string(ErrorCodeName(issue.code)) + ": ") << issue.message
        << "\n";
  }
  if (failed) return kExitLexicon;
  const lexicon::Lexicon lex = lexicon::ParseLexicon(*tsv);
  out << lex.size() << " terms, " << lex.surface_forms().size() << " surface forms\n";
  return kExitOk;
}

int Serve(std::ostream& err) {
  Config config;
  try {
    config = Config::FromProcessEnv();
  } catch (const Error& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  // Route SIGINT/SIGTERM to a waiter thread; every other thread inherits the
  // blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  std::unique_ptr<Service> service;
  try {
    service = BuildService(config);
  } catch (const Error& e) {
    if (IsLexiconError(e.code()) || e.code() == ErrorCode::kIo) {
      err << "lexicon error: " << e.what() << "\n";
      return kExitLexicon;
    }
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  api::ApiServer server(*service);
  const int port = server.Bind(config.bind_host, config.bind_port);
  if (port < 0) {
    err << "error: cannot bind " << config.bind_host << ":" << config.bind_port << "\n";
    return kExitFailure;
  }
  service->pipeline->Start();
  spdlog::info("serving on {}:{} (translator={}, annotator={}, {} lexicon terms)",
               config.bind_host, port, service->translator->name(), service->annotator->name(),
               service->lexicon->size());

  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    spdlog::info("received signal {}, shutting down", sig);
    server.Stop();
  });
  server.Serve();
  // Serve can also return on its own; wake the waiter so it can be joined.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  service->pipeline->Stop();
  return kExitOk;
}

}  // namespace

std::string EscapeTsv(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (char c : field) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"MRA: multilingual radiology report annotator"};
  app.require_subcommand(1);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service configured by MRA_* variables");

  auto* annotate = app.add_subcommand("annotate", "Annotate a text file with a lexicon");
  std::string lexicon_path, input_path, format = "tsv";
  annotate->add_option("--lexicon", lexicon_path, "Lexicon TSV")->required();
  annotate->add_option("--in", input_path, "Input text file")->required();
  annotate->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"tsv", "ndjson"}));

  auto* lexicon_cmd = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon_cmd->require_subcommand(1);
  auto* validate = lexicon_cmd->add_subcommand("validate", "Check a lexicon TSV file");
  std::string validate_path;
  validate->add_option("file", validate_path, "Lexicon TSV")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n" << app.help();
    return kExitConfig;
  }

  if (*annotate) return Annotate(lexicon_path, input_path, format, out, err);
  if (*validate) return Validate(validate_path, out, err);
  if (*serve) return Serve(err);
  return kExitFailure;
}

}  // namespace mra::cli
