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

#include "mra/annotator.hpp"

#include <algorithm>
#include <tuple>

#include "mra/error.hpp"
#include "http_util.hpp"

namespace mra::annotator {

std::string_view SourceName(AnnotationSource source) {
  return source == AnnotationSource::kLocal ? "local" : "remote";
}

std::vector<CandidateMatch> FindCandidates(std::string_view text,
                                           std::span<const text::Token> tokens,
                                           const MatchIndex& index) {
  std::vector<std::string> normalized;
  normalized.reserve(tokens.size());
  for (const text::Token& token : tokens) normalized.push_back(text::Normalize(token.text));

  std::vector<CandidateMatch> out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::vector<CandidateMatch> from_here;
    MatchIndex::NodeId node = MatchIndex::kRoot;
    for (std::size_t j = i; j < tokens.size(); ++j) {
      const auto next = index.Child(node, normalized[j]);
      if (!next) break;
      node = *next;
      if (const IndexEntry* entry = index.Accepting(node)) {
        CandidateMatch match;
        match.term_id = entry->term_id;
        match.start = tokens[i].start;
        match.end = tokens[j].end;
        match.matched_text =
            std::string(text.substr(tokens[i].byte_start, tokens[j].byte_end - tokens[i].byte_start));
        match.surface_form = entry->surface_form;
        match.first_token = i;
        match.token_count = j - i + 1;
        from_here.push_back(std::move(match));
      }
    }
    // Longer matches first for the same start.
    out.insert(out.end(), std::make_move_iterator(from_here.rbegin()),
               std::make_move_iterator(from_here.rend()));
  }
  return out;
}

std::vector<Annotation> ResolveOverlaps(std::span<const CandidateMatch> candidates,
                                        AnnotationSource source) {
  std::vector<Annotation> kept;
  std::size_t frontier = 0;
  for (const CandidateMatch& candidate : candidates) {
    // Sorted by start, so overlap with any kept span means overlap with the
    // last one.
    if (!kept.empty() && candidate.start < frontier) continue;
    kept.push_back(Annotation{candidate.term_id, candidate.start, candidate.end,
                              candidate.matched_text, candidate.surface_form, source});
    frontier = candidate.end;
  }
  return kept;
}

std::vector<Annotation> Annotate(std::string_view text, const MatchIndex& index) {
  const std::vector<text::Token> tokens = text::Tokenize(text);
  return ResolveOverlaps(FindCandidates(text, tokens, index));
}

AnnotationResult ParseRemoteAnnotations(std::string_view payload, std::string_view text) {
  nlohmann::json doc = nlohmann::json::parse(payload, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kMalformedPayload, "remote annotator response is not a JSON document");
  }
  return ParseRemoteAnnotations(doc, text);
}

AnnotationResult ParseRemoteAnnotations(const nlohmann::json& payload, std::string_view text) {
  const nlohmann::json* records = nullptr;
  if (payload.is_array()) {
    records = &payload;
  } else if (payload.is_object() && payload.contains("annotations") &&
             payload["annotations"].is_array()) {
    records = &payload["annotations"];
  } else {
    throw Error(ErrorCode::kMalformedPayload, "remote annotator response has no record list");
  }

  const std::vector<std::size_t> bounds = text::ScalarBoundaries(text);
  const std::size_t length = bounds.size() - 1;

  AnnotationResult result;
  std::vector<CandidateMatch> candidates;
  for (const nlohmann::json& record : *records) {
    if (!record.is_object() || !record.contains("id") || !record["id"].is_string() ||
        !record.contains("from") || !record["from"].is_number_integer() ||
        !record.contains("to") || !record["to"].is_number_integer()) {
      ++result.dropped;
      continue;
    }
    const auto from = record["from"].get<long long>();
    const auto to = record["to"].get<long long>();
    if (from < 1 || to < from || static_cast<unsigned long long>(to) > length) {
      ++result.dropped;
      continue;
    }
    const auto start = static_cast<std::size_t>(from - 1);
    const auto end = static_cast<std::size_t>(to);
    std::string slice(text.substr(bounds[start], bounds[end] - bounds[start]));
    if (record.contains("matched_text")) {
      const auto& claimed = record["matched_text"];
      if (!claimed.is_string() || claimed.get<std::string>() != slice) {
        ++result.dropped;
        continue;
      }
    }
    CandidateMatch candidate;
    candidate.term_id = record["id"].get<std::string>();
    candidate.start = start;
    candidate.end = end;
    candidate.surface_form = text::SurfaceKey(slice);
    candidate.matched_text = std::move(slice);
    candidates.push_back(std::move(candidate));
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const CandidateMatch& a, const CandidateMatch& b) {
              return std::tuple(a.start, b.end, a.term_id) < std::tuple(b.start, a.end, b.term_id);
            });
  result.annotations = ResolveOverlaps(candidates, AnnotationSource::kRemote);
  return result;
}

nlohmann::json ToRemoteRecords(std::span<const Annotation> annotations) {
  nlohmann::json records = nlohmann::json::array();
  for (const Annotation& a : annotations) {
    records.push_back({{"id", a.term_id},
                       {"from", a.start + 1},
                       {"to", a.end},
                       {"matched_text", a.matched_text}});
  }
  return records;
}

AnnotationResult LocalAnnotator::Annotate(std::string_view text) {
  return AnnotationResult{annotator::Annotate(text, *index_), 0};
}

RemoteAnnotator::RemoteAnnotator(RemoteEndpoint endpoint) : endpoint_(std::move(endpoint)) {
  if (endpoint_.api_key.empty()) {
    throw Error(ErrorCode::kMissingCredentials, "remote annotator requires an API key");
  }
}

AnnotationResult RemoteAnnotator::Annotate(std::string_view text) {
  http::JsonClient client(endpoint_.base_url, endpoint_.api_key, endpoint_.timeout);
  const http::JsonResponse response =
      client.Post("/annotate", nlohmann::json{{"text", std::string(text)}});
  if (response.status != 200) {
    throw Error(ErrorCode::kBackendUnavailable,
                "remote annotator returned HTTP " + std::to_string(response.status));
  }
  return ParseRemoteAnnotations(std::string_view(response.body), text);
}

}  // namespace mra::annotator
