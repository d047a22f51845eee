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

#include <functional>

#include "mctsynth/circuit.hpp"

namespace mctsynth {

/// Conservative commutation test. Returns true when
///  - the supports are disjoint, or
///  - both gates are controlled-X type (X, CX, CCX, MCT) and neither target
///    is a control of the other, or
///  - at least one gate is a controlled root of X and every shared line is a
///    control of both gates.
/// Peres gates only commute through disjoint supports. A false result makes
/// no claim.
bool commutes(const Gate& a, const Gate& b);

/// Called for every swap the cancellation pass relies on: `moving` was
/// commuted past `other`.
using CommutationObserver =
    std::function<void(const Gate& moving, const Gate& other)>;

/// Removes pairs of identical self-inverse gates (X, CX, CCX, MCT on the same
/// lines) whenever every gate between them commutes with the first one.
/// The leftmost removable pair goes first; repeats until nothing changes.
Circuit cancel_pairs(
    const Circuit& circuit, const CommutationObserver& observer = {});

}  // namespace mctsynth
