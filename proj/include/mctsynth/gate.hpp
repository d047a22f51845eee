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

#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <vector>

namespace mctsynth {

/// 0-based position of a circuit line. Line 0 is the most significant bit of
/// a basis-state index during simulation.
using LineIndex = std::uint32_t;

enum class GateKind : std::uint8_t {
  X,
  CX,
  CCX,
  CV,     // controlled-V, V = sqrt(X)
  CVD,    // controlled-V^dagger
  CRX,    // controlled principal 2^k-th root of X
  CRXD,   // its inverse
  Peres,  // CCX(x1,x2,x3) then CX(x1,x2)
  IPeres, // CX(x1,x2) then CCX(x1,x2,x3)
  MCT,    // multi-controlled X, any number of controls
};

std::string_view to_string(GateKind kind);

/// True for gates whose action on basis states is a permutation
/// (X, CX, CCX, MCT, Peres, inverse Peres).
bool is_permutation_kind(GateKind kind);

/// True for CV, CVD, CRX and CRXD.
bool is_root_kind(GateKind kind);

/// True for X, CX, CCX and MCT.
bool is_self_inverse_kind(GateKind kind);

/// One gate instance. Lines are stored controls-first with the target last;
/// for Peres gates the order is (x1, x2, x3) where x1 controls the CNOT onto
/// x2 and x3 is the Toffoli target.
///
/// Construction does not check line distinctness; `validate` on the owning
/// circuit does.
class Gate {
 public:
  static Gate x(LineIndex target);
  static Gate cx(LineIndex control, LineIndex target);
  static Gate ccx(LineIndex c1, LineIndex c2, LineIndex target);
  static Gate cv(LineIndex control, LineIndex target);
  static Gate cvd(LineIndex control, LineIndex target);
  static Gate crx(LineIndex control, LineIndex target, unsigned k);
  static Gate crxd(LineIndex control, LineIndex target, unsigned k);
  static Gate peres(LineIndex x1, LineIndex x2, LineIndex x3);
  static Gate iperes(LineIndex x1, LineIndex x2, LineIndex x3);
  static Gate mct(std::vector<LineIndex> controls, LineIndex target);

  GateKind kind() const noexcept { return kind_; }

  /// Root exponent k for CRX/CRXD (the gate is a 2^k-th root of X); 0 for
  /// every other kind.
  unsigned root() const noexcept { return root_; }

  std::span<const LineIndex> lines() const noexcept { return lines_; }

  /// All lines but the last. For Peres gates this is (x1, x2).
  std::span<const LineIndex> controls() const noexcept {
    return std::span<const LineIndex>(lines_).first(lines_.size() - 1);
  }

  LineIndex target() const noexcept { return lines_.back(); }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  Gate(GateKind kind, std::vector<LineIndex> lines, unsigned root = 0);

  GateKind kind_;
  unsigned root_;
  std::vector<LineIndex> lines_;
};

/// Lines the gate touches (controls and target).
std::set<LineIndex> support(const Gate& gate);

/// The gate implementing the inverse operator.
Gate inverse(const Gate& gate);

}  // namespace mctsynth
