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
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mra/match_index.hpp"
#include "mra/text.hpp"

namespace mra::annotator {

enum class AnnotationSource { kLocal, kRemote };

std::string_view SourceName(AnnotationSource source);

// A term occurrence in the annotated text, [start, end) in scalar values.
struct Annotation {
  std::string term_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string matched_text;
  std::string surface_form;
  AnnotationSource source = AnnotationSource::kLocal;

  friend bool operator==(const Annotation&, const Annotation&) = default;
};

struct CandidateMatch {
  std::string term_id;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string matched_text;
  std::string surface_form;
  std::size_t first_token = 0;
  std::size_t token_count = 0;

  friend bool operator==(const CandidateMatch&, const CandidateMatch&) = default;
};

// Every token-aligned span accepted by `index`, sorted by (start asc, end
// desc). `tokens` must come from Tokenize(text).
std::vector<CandidateMatch> FindCandidates(std::string_view text,
                                           std::span<const text::Token> tokens,
                                           const MatchIndex& index);

// Greedy leftmost-longest: walks the sorted candidates and keeps each one
// that does not overlap an already kept one.
std::vector<Annotation> ResolveOverlaps(std::span<const CandidateMatch> candidates,
                                        AnnotationSource source = AnnotationSource::kLocal);

std::vector<Annotation> Annotate(std::string_view text, const MatchIndex& index);

struct AnnotationResult {
  std::vector<Annotation> annotations;
  // Remote records discarded for bad offsets or mismatched text.
  std::size_t dropped = 0;
};

// Converts a remote annotator response (records with 1-based inclusive
// `from`/`to`) for `text` into non-overlapping annotations. Accepts either a
// bare record array or an object with an `annotations` array. Throws
// MalformedPayload when the document itself cannot be decoded.
AnnotationResult ParseRemoteAnnotations(std::string_view payload, std::string_view text);
AnnotationResult ParseRemoteAnnotations(const nlohmann::json& payload, std::string_view text);

// Inverse of the conversion above, used to build remote fixtures.
nlohmann::json ToRemoteRecords(std::span<const Annotation> annotations);

// The annotator the pipeline calls once the English text is available.
class AnnotatorBackend {
 public:
  virtual ~AnnotatorBackend() = default;
  virtual std::string name() const = 0;
  virtual AnnotationResult Annotate(std::string_view text) = 0;
};

class LocalAnnotator : public AnnotatorBackend {
 public:
  explicit LocalAnnotator(std::shared_ptr<const MatchIndex> index) : index_(std::move(index)) {}

  std::string name() const override { return "local"; }
  AnnotationResult Annotate(std::string_view text) override;

 private:
  std::shared_ptr<const MatchIndex> index_;
};

struct RemoteEndpoint {
  std::string base_url;
  std::string api_key;
  std::chrono::milliseconds timeout{10000};
};

// Speaks `POST {base}/annotate` with {"text": ...} and a bearer key; the
// response body goes through ParseRemoteAnnotations.
class RemoteAnnotator : public AnnotatorBackend {
 public:
  // Throws MissingCredentials when the key is empty.
  explicit RemoteAnnotator(RemoteEndpoint endpoint);

  std::string name() const override { return "remote"; }
  AnnotationResult Annotate(std::string_view text) override;

 private:
  RemoteEndpoint endpoint_;
};

}  // namespace mra::annotator
