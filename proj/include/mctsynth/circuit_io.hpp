// Copyright 2026 The mctsynth Authors
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

#include <string>
#include <string_view>

#include "mctsynth/circuit.hpp"

namespace mctsynth {

/// Reads the native text format:
///
///   .lines 3
///   .roles c c t          (optional)
///   ccx 0 1 2
///   crx 0 2 k=2
///   mct 0 1 : 2
///   .end
///
/// `#` starts a comment. Throws ParseError(SyntaxError) with the 1-based line
/// number and offending token, or ParseError(ValidationError) when the parsed
/// circuit fails `validate`.
Circuit parse_circuit(std::string_view text);

/// Writes the canonical form: no comments, single spaces, LF endings.
std::string serialize_circuit(const Circuit& circuit);

/// Text mnemonic of a gate kind (`cv+`, `peres+`, ...).
std::string_view mnemonic(GateKind kind);

}  // namespace mctsynth
