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

#include "mctsynth/cost.hpp"

#include <iomanip>
#include <ostream>
#include <string>

#include "mctsynth/decomp.hpp"
#include "mctsynth/error.hpp"

namespace mctsynth {

namespace {

Cost gray_code_cost(unsigned m) {
  if (m > 61) {
    throw Error(
        ErrorCode::OutOfRange,
        "2^(m+1)-3 overflows for m=" + std::to_string(m));
  }
  return (Cost{1} << (m + 1)) - 3;
}

}  // namespace

Cost gate_cost(const Gate& gate) {
  switch (gate.kind()) {
    case GateKind::Peres:
    case GateKind::IPeres:
      return 4;
    case GateKind::CCX:
      return 5;
    case GateKind::MCT: {
      const auto m = static_cast<unsigned>(gate.controls().size());
      return m <= 1 ? 1 : gray_code_cost(m);
    }
    default:
      return 1;
  }
}

Cost circuit_cost(const Circuit& circuit) {
  Cost total = 0;
  for (const Gate& g : circuit.gates()) total += gate_cost(g);
  return total;
}

std::string_view to_string(Formula formula) {
  switch (formula) {
    case Formula::Lemma71:
      return "lemma71";
    case Formula::Lemma72ToffoliCount:
      return "lemma72_toffoli_count";
    case Formula::Lemma72Peres:
      return "lemma72_peres";
    case Formula::Cor74ToffoliCount:
      return "cor74_toffoli_count";
    case Formula::Cor74Peres:
      return "cor74_peres";
    case Formula::Cor74Barenco:
      return "cor74_barenco";
  }
  return "?";
}

std::optional<Formula> parse_formula(std::string_view label) {
  for (Formula f :
       {Formula::Lemma71, Formula::Lemma72ToffoliCount, Formula::Lemma72Peres,
        Formula::Cor74ToffoliCount, Formula::Cor74Peres,
        Formula::Cor74Barenco}) {
    if (to_string(f) == label) return f;
  }
  return std::nullopt;
}

unsigned formula_min_m(Formula formula) {
  switch (formula) {
    case Formula::Lemma71:
      return 1;
    case Formula::Lemma72ToffoliCount:
    case Formula::Lemma72Peres:
      return 3;
    case Formula::Cor74ToffoliCount:
    case Formula::Cor74Peres:
    case Formula::Cor74Barenco:
      return 5;
  }
  return 0;
}

Cost formula_cost(Formula formula, unsigned m) {
  if (m < formula_min_m(formula)) {
    throw Error(
        ErrorCode::OutOfRange,
        std::string(to_string(formula)) + " is defined for m >= " +
            std::to_string(formula_min_m(formula)) + ", got " +
            std::to_string(m));
  }
  const Cost mm = m;
  switch (formula) {
    case Formula::Lemma71:
      return gray_code_cost(m);
    case Formula::Lemma72ToffoliCount:
      return 4 * (mm - 2);
    case Formula::Lemma72Peres:
      return 16 * mm - 32;
    case Formula::Cor74ToffoliCount:
      return 8 * ((mm + 2) - 5);
    case Formula::Cor74Peres:
      return 32 * mm - 96;
    case Formula::Cor74Barenco:
      return 48 * mm - 116;
  }
  return 0;
}

std::vector<CostRow> cost_table(unsigned max_size) {
  std::vector<CostRow> rows;
  for (unsigned size = 1; size <= max_size; ++size) {
    std::vector<unsigned> classes{0};
    if (size >= 6) {
      classes.push_back(1);
      classes.push_back(size - 3);
    }
    for (unsigned garbage : classes) {
      const SynthesisResult r = synthesize(size, garbage);
      rows.push_back(
          {size, garbage, circuit_cost(expand(r.circuit)), r.strategy});
    }
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<CostRow>& rows) {
  out << "size,garbage,cost,strategy\n";
  for (const CostRow& r : rows) {
    out << r.size << ',' << r.garbage << ',' << r.cost << ',' << r.strategy
        << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<CostRow>& rows) {
  out << std::left << std::setw(6) << "size" << std::setw(9) << "garbage"
      << std::setw(8) << "cost"
      << "strategy\n";
  for (const CostRow& r : rows) {
    out << std::left << std::setw(6) << r.size << std::setw(9) << r.garbage
        << std::setw(8) << r.cost << r.strategy << '\n';
  }
}

}  // namespace mctsynth
