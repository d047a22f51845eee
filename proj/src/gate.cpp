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

#include "mctsynth/gate.hpp"

#include "mctsynth/error.hpp"

namespace mctsynth {

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X:
      return "X";
    case GateKind::CX:
      return "CX";
    case GateKind::CCX:
      return "CCX";
    case GateKind::CV:
      return "CV";
    case GateKind::CVD:
      return "CVD";
    case GateKind::CRX:
      return "CRX";
    case GateKind::CRXD:
      return "CRXD";
    case GateKind::Peres:
      return "PERES";
    case GateKind::IPeres:
      return "IPERES";
    case GateKind::MCT:
      return "MCT";
  }
  return "?";
}

bool is_permutation_kind(GateKind kind) {
  switch (kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCT:
    case GateKind::Peres:
    case GateKind::IPeres:
      return true;
    default:
      return false;
  }
}

bool is_root_kind(GateKind kind) {
  return kind == GateKind::CV || kind == GateKind::CVD ||
         kind == GateKind::CRX || kind == GateKind::CRXD;
}

bool is_self_inverse_kind(GateKind kind) {
  return kind == GateKind::X || kind == GateKind::CX ||
         kind == GateKind::CCX || kind == GateKind::MCT;
}

Gate::Gate(GateKind kind, std::vector<LineIndex> lines, unsigned root)
    : kind_(kind), root_(root), lines_(std::move(lines)) {}

Gate Gate::x(LineIndex target) { return Gate(GateKind::X, {target}); }

Gate Gate::cx(LineIndex control, LineIndex target) {
  return Gate(GateKind::CX, {control, target});
}

Gate Gate::ccx(LineIndex c1, LineIndex c2, LineIndex target) {
  return Gate(GateKind::CCX, {c1, c2, target});
}

Gate Gate::cv(LineIndex control, LineIndex target) {
  return Gate(GateKind::CV, {control, target});
}

Gate Gate::cvd(LineIndex control, LineIndex target) {
  return Gate(GateKind::CVD, {control, target});
}

Gate Gate::crx(LineIndex control, LineIndex target, unsigned k) {
  if (k < 1) {
    throw Error(ErrorCode::OutOfRange, "crx root exponent must be >= 1");
  }
  return Gate(GateKind::CRX, {control, target}, k);
}

Gate Gate::crxd(LineIndex control, LineIndex target, unsigned k) {
  if (k < 1) {
    throw Error(ErrorCode::OutOfRange, "crx+ root exponent must be >= 1");
  }
  return Gate(GateKind::CRXD, {control, target}, k);
}

Gate Gate::peres(LineIndex x1, LineIndex x2, LineIndex x3) {
  return Gate(GateKind::Peres, {x1, x2, x3});
}

Gate Gate::iperes(LineIndex x1, LineIndex x2, LineIndex x3) {
  return Gate(GateKind::IPeres, {x1, x2, x3});
}

Gate Gate::mct(std::vector<LineIndex> controls, LineIndex target) {
  controls.push_back(target);
  return Gate(GateKind::MCT, std::move(controls));
}

std::set<LineIndex> support(const Gate& gate) {
  return {gate.lines().begin(), gate.lines().end()};
}

Gate inverse(const Gate& gate) {
  const auto l = gate.lines();
  switch (gate.kind()) {
    case GateKind::CV:
      return Gate::cvd(l[0], l[1]);
    case GateKind::CVD:
      return Gate::cv(l[0], l[1]);
    case GateKind::CRX:
      return Gate::crxd(l[0], l[1], gate.root());
    case GateKind::CRXD:
      return Gate::crx(l[0], l[1], gate.root());
    case GateKind::Peres:
      return Gate::iperes(l[0], l[1], l[2]);
    case GateKind::IPeres:
      return Gate::peres(l[0], l[1], l[2]);
    default:
      return gate;
  }
}

}  // namespace mctsynth
