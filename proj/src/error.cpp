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

#include "mra/error.hpp"

namespace mra {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kDanglingParent: return "DanglingParent";
    case ErrorCode::kUnknownTerm: return "UnknownTerm";
    case ErrorCode::kMalformedPayload: return "MalformedPayload";
    case ErrorCode::kUnsupportedLanguage: return "UnsupportedLanguage";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kMissingCredentials: return "MissingCredentials";
    case ErrorCode::kUnknownJob: return "UnknownJob";
    case ErrorCode::kIllegalTransition: return "IllegalTransition";
    case ErrorCode::kNotFailed: return "NotFailed";
    case ErrorCode::kUnknownReport: return "UnknownReport";
    case ErrorCode::kEmptyText: return "EmptyText";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidEncoding: return "InvalidEncoding";
    case ErrorCode::kCorruptJournal: return "CorruptJournal";
    case ErrorCode::kConfig: return "Config";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace mra
