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

#include <optional>
#include <vector>

#include "mctsynth/gate.hpp"

namespace mctsynth {

enum class Role : char { Control = 'c', Target = 't', Ancilla = 'a' };

/// Ordered gate sequence over a fixed number of lines. Gates apply
/// left-to-right. Roles are optional and, when present, cover every line.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(unsigned width) : width_(width) {}
  Circuit(unsigned width, std::vector<Gate> gates)
      : width_(width), gates_(std::move(gates)) {}

  unsigned width() const noexcept { return width_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  const std::optional<std::vector<Role>>& roles() const noexcept {
    return roles_;
  }
  void set_roles(std::vector<Role> roles) { roles_ = std::move(roles); }
  void clear_roles() { roles_.reset(); }

  void append(Gate gate) { gates_.push_back(std::move(gate)); }

  /// Appends every gate of `other`, which must not be wider than this circuit.
  void append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  unsigned width_ = 0;
  std::vector<Gate> gates_;
  std::optional<std::vector<Role>> roles_;
};

/// Throws Error(IndexOutOfRange | DuplicateLine | BadRoles) when a circuit
/// invariant is violated.
void validate(const Circuit& circuit);

/// Gate order reversed, each gate replaced by its inverse. Roles are kept.
Circuit inverse(const Circuit& circuit);

/// Lines carrying `role`, ascending. Empty when the circuit has no roles.
std::vector<LineIndex> lines_with_role(const Circuit& circuit, Role role);

}  // namespace mctsynth
