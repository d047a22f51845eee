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

#include "mctsynth/circuit.hpp"

#include <algorithm>
#include <string>

#include "mctsynth/error.hpp"

namespace mctsynth {

void Circuit::append(const Circuit& other) {
  if (other.width() > width_) {
    throw Error(
        ErrorCode::IndexOutOfRange,
        "cannot append a " + std::to_string(other.width()) +
            "-line circuit to a " + std::to_string(width_) + "-line circuit");
  }
  gates_.insert(gates_.end(), other.gates().begin(), other.gates().end());
}

void validate(const Circuit& circuit) {
  const unsigned width = circuit.width();
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    const Gate& g = circuit.gates()[i];
    const auto lines = g.lines();
    for (std::size_t a = 0; a < lines.size(); ++a) {
      if (lines[a] >= width) {
        throw Error(
            ErrorCode::IndexOutOfRange,
            "gate " + std::to_string(i) + " (" + std::string(to_string(g.kind())) +
                ") uses line " + std::to_string(lines[a]) + " on a " +
                std::to_string(width) + "-line circuit");
      }
      for (std::size_t b = a + 1; b < lines.size(); ++b) {
        if (lines[a] == lines[b]) {
          throw Error(
              ErrorCode::DuplicateLine,
              "gate " + std::to_string(i) + " (" +
                  std::string(to_string(g.kind())) + ") uses line " +
                  std::to_string(lines[a]) + " twice");
        }
      }
    }
  }
  if (const auto& roles = circuit.roles()) {
    if (roles->size() != width) {
      throw Error(
          ErrorCode::BadRoles, "roles list has " +
                                   std::to_string(roles->size()) +
                                   " entries for " + std::to_string(width) +
                                   " lines");
    }
    if (std::count(roles->begin(), roles->end(), Role::Target) != 1) {
      throw Error(ErrorCode::BadRoles, "roles must name exactly one target");
    }
  }
}

Circuit inverse(const Circuit& circuit) {
  std::vector<Gate> gates;
  gates.reserve(circuit.size());
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) {
    gates.push_back(inverse(*it));
  }
  Circuit out(circuit.width(), std::move(gates));
  if (circuit.roles()) out.set_roles(*circuit.roles());
  return out;
}

std::vector<LineIndex> lines_with_role(const Circuit& circuit, Role role) {
  std::vector<LineIndex> out;
  if (!circuit.roles()) return out;
  const auto& roles = *circuit.roles();
  for (LineIndex i = 0; i < roles.size(); ++i) {
    if (roles[i] == role) out.push_back(i);
  }
  return out;
}

}  // namespace mctsynth
