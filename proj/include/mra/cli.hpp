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

#include <ostream>

namespace mra::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitLexicon = 3;
inline constexpr int kExitInput = 4;

// Entry point behind the `mra` binary. Data goes to `out`, diagnostics to
// `err`.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// TSV field escaping used by `mra annotate --format tsv`: backslash, tab,
// newline and carriage return become \\, \t, \n and \r.
std::string EscapeTsv(std::string_view field);

}  // namespace mra::cli
