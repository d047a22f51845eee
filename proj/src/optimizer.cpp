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

#include "mctsynth/optimizer.hpp"

#include <algorithm>

namespace mctsynth {

namespace {

bool contains(std::span<const LineIndex> lines, LineIndex l) {
  return std::find(lines.begin(), lines.end(), l) != lines.end();
}

bool disjoint(const Gate& a, const Gate& b) {
  return std::none_of(a.lines().begin(), a.lines().end(), [&](LineIndex l) {
    return contains(b.lines(), l);
  });
}

}  // namespace

bool commutes(const Gate& a, const Gate& b) {
  if (disjoint(a, b)) return true;

  const bool a_x = is_self_inverse_kind(a.kind());
  const bool b_x = is_self_inverse_kind(b.kind());
  if (a_x && b_x) {
    return !contains(b.controls(), a.target()) &&
           !contains(a.controls(), b.target());
  }

  if (is_root_kind(a.kind()) || is_root_kind(b.kind())) {
    if (a.kind() == GateKind::Peres || a.kind() == GateKind::IPeres ||
        b.kind() == GateKind::Peres || b.kind() == GateKind::IPeres) {
      return false;
    }
    for (LineIndex l : a.lines()) {
      if (!contains(b.lines(), l)) continue;
      if (!contains(a.controls(), l) || !contains(b.controls(), l)) {
        return false;
      }
    }
    return true;
  }
  return false;
}

Circuit cancel_pairs(const Circuit& circuit, const CommutationObserver& observer) {
  std::vector<Gate> gates = circuit.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < gates.size() && !changed; ++i) {
      if (!is_self_inverse_kind(gates[i].kind())) continue;
      for (std::size_t j = i + 1; j < gates.size(); ++j) {
        if (gates[j] == gates[i]) {
          if (observer) {
            for (std::size_t k = i + 1; k < j; ++k) observer(gates[i], gates[k]);
          }
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
          gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        }
        if (!commutes(gates[i], gates[j])) break;
      }
    }
  }
  Circuit out(circuit.width(), std::move(gates));
  if (circuit.roles()) out.set_roles(*circuit.roles());
  return out;
}

}  // namespace mctsynth
