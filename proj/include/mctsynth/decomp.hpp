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

#include <span>
#include <string>
#include <vector>

#include "mctsynth/circuit.hpp"
#include "mctsynth/cost.hpp"

namespace mctsynth {

/// A synthesized MCT network together with its line bookkeeping.
///
/// Layout convention: controls are lines 0..m-1, the target is line m and
/// extra lines start at m+1.
struct SynthesisResult {
  Circuit circuit;
  std::vector<LineIndex> controls;
  LineIndex target = 0;
  /// Every line that is neither a control nor the target.
  std::vector<LineIndex> extra_lines;
  /// Elementary cost after full macro expansion.
  Cost cost = 0;
  /// Garbage as accounted in the reference cost table. This is bookkeeping,
  /// not a measurement; `check_mct` reports which lines actually change.
  unsigned garbage_reported = 0;
  std::string strategy;

  /// Controls followed by the target.
  std::vector<LineIndex> main_lines() const;
};

enum class LadderVariant { Toffoli, Peres };

/// Four elementary gates realizing Peres(x1,x2,x3) = CCX(x1,x2,x3) then
/// CX(x1,x2). With `inverted` the result is the gate-wise inverse sequence,
/// i.e. CX(x1,x2) then CCX(x1,x2,x3). A zero `width` means max line + 1.
Circuit expand_peres(
    LineIndex x1, LineIndex x2, LineIndex x3, bool inverted,
    unsigned width = 0);

/// Five elementary gates realizing CCX(c1,c2,t).
Circuit expand_toffoli3(
    LineIndex c1, LineIndex c2, LineIndex target, unsigned width = 0);

/// Replaces every macro gate (CCX, PERES, IPERES, MCT) with elementary gates.
/// MCT with m >= 3 controls uses the gray-code network.
Circuit expand(const Circuit& circuit);

/// Rewrites PERES as (CCX, CX) and IPERES as (CX, CCX); other gates pass
/// through.
Circuit peres_to_toffoli_cnot(const Circuit& circuit);

/// Ancilla-free gray-code network for MCT(controls -> target): 2^m - 1
/// controlled 2^(m-1)-th roots of X and 2^m - 2 CNOTs among the controls.
/// Requires at least 2 controls.
Circuit gray_code_network(
    std::span<const LineIndex> controls, LineIndex target, unsigned width);

/// Ladder of 4(m-2) Toffolis (or Peres gates) realizing MCT(controls ->
/// target) with m-2 borrowed ancillas whose initial values are arbitrary.
/// Requires width >= 5 and 3 <= m <= ceil(width/2).
Circuit ladder_network(
    std::span<const LineIndex> controls, LineIndex target,
    std::span<const LineIndex> ancillas, unsigned width, LadderVariant variant);

/// Gray-code construction on m+1 lines. Throws Error(OutOfRange) for m < 2.
SynthesisResult lemma71(unsigned m);

/// Ladder construction with the default layout on `width` lines (ancillas at
/// m+1..2m-2; any remaining lines idle).
SynthesisResult lemma72(unsigned m, unsigned width, LadderVariant variant);

/// Ladder construction on explicit lines.
SynthesisResult lemma72(
    unsigned m, unsigned width, std::span<const LineIndex> controls,
    LineIndex target, std::span<const LineIndex> ancillas,
    LadderVariant variant);

/// Split construction A, B, A, B on m+2 lines with one extra line b = m+1:
/// A is MCT(first m1 controls -> b), B is MCT(remaining controls and b ->
/// target), m1 = ceil((m+1)/2). Both pieces use the ladder. Throws
/// Error(OutOfRange) for m < 5.
SynthesisResult corollary74(unsigned m, LadderVariant variant);

/// Split construction with an explicit first-piece size `m1`; each piece is
/// realized by the cheapest method its borrowed lines allow. Requires
/// 2 <= m1 <= m-1.
SynthesisResult split_network(unsigned m, unsigned m1);

/// Cheapest known construction for an MCT of `size` lines (size-1 controls)
/// using at most `garbage_budget` extra lines.
SynthesisResult synthesize(unsigned size, unsigned garbage_budget);

}  // namespace mctsynth
