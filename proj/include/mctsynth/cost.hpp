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
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mctsynth/circuit.hpp"

namespace mctsynth {

using Cost = std::uint64_t;

/// Elementary quantum cost of one gate: 1 for X, CX and every controlled
/// root of X; 4 for a Peres gate or its inverse; 5 for a Toffoli; and the
/// ancilla-free gray-code cost 2^(m+1)-3 for an MCT with m >= 1 controls.
Cost gate_cost(const Gate& gate);

Cost circuit_cost(const Circuit& circuit);

/// Closed-form cost (or gate count) families.
enum class Formula {
  Lemma71,             // 2^(m+1) - 3, m >= 1
  Lemma72ToffoliCount, // 4(m - 2), m >= 3
  Lemma72Peres,        // 16m - 32, m >= 3
  Cor74ToffoliCount,   // 8(n - 5) with n = m + 2, m >= 5
  Cor74Peres,          // 32m - 96, m >= 5
  Cor74Barenco,        // 48m - 116, m >= 5
};

std::string_view to_string(Formula formula);
std::optional<Formula> parse_formula(std::string_view label);

/// Smallest m for which the formula is defined.
unsigned formula_min_m(Formula formula);

/// Throws Error(OutOfRange) when m is below the formula's minimum, or when
/// the result would not fit in 64 bits.
Cost formula_cost(Formula formula, unsigned m);

struct CostRow {
  unsigned size = 0;     // controls + 1
  unsigned garbage = 0;
  Cost cost = 0;
  std::string strategy;

  friend bool operator==(const CostRow&, const CostRow&) = default;
};

/// For every size 1..max_size: the garbage-0 row, and for size >= 6 also the
/// garbage-1 and garbage-(size-3) rows. Each row is produced by running the
/// synthesis selector and costing the fully expanded circuit it returns.
std::vector<CostRow> cost_table(unsigned max_size);

/// `size,garbage,cost,strategy` header followed by one line per row.
void write_csv(std::ostream& out, const std::vector<CostRow>& rows);

/// Fixed-width human-readable table.
void write_table(std::ostream& out, const std::vector<CostRow>& rows);

}  // namespace mctsynth
