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

#include "mctsynth/decomp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>

#include "mctsynth/error.hpp"

namespace mctsynth {

namespace {

unsigned minimal_width(std::initializer_list<LineIndex> lines, unsigned width) {
  const unsigned needed = std::max(lines) + 1;
  if (width == 0) return needed;
  if (width < needed) {
    throw Error(ErrorCode::IndexOutOfRange, "line index exceeds circuit width");
  }
  return width;
}

void require_distinct(std::initializer_list<LineIndex> lines) {
  const std::set<LineIndex> s(lines);
  if (s.size() != lines.size()) {
    throw Error(ErrorCode::DuplicateLine, "gate lines must be distinct");
  }
}

void require_in_width(std::span<const LineIndex> lines, unsigned width) {
  for (LineIndex l : lines) {
    if (l >= width) {
      throw Error(
          ErrorCode::IndexOutOfRange,
          "line " + std::to_string(l) + " outside width " + std::to_string(width));
    }
  }
}

std::vector<Role> roles_for(
    unsigned width, std::span<const LineIndex> controls, LineIndex target) {
  std::vector<Role> roles(width, Role::Ancilla);
  for (LineIndex c : controls) roles[c] = Role::Control;
  roles[target] = Role::Target;
  return roles;
}

std::vector<LineIndex> iota_lines(LineIndex first, LineIndex count) {
  std::vector<LineIndex> out(count);
  for (LineIndex i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

SynthesisResult finish(
    Circuit circuit, std::vector<LineIndex> controls, LineIndex target,
    unsigned garbage, std::string strategy) {
  SynthesisResult r;
  circuit.set_roles(roles_for(circuit.width(), controls, target));
  validate(circuit);
  r.cost = circuit_cost(expand(circuit));
  for (LineIndex l = 0; l < circuit.width(); ++l) {
    if (l != target &&
        std::find(controls.begin(), controls.end(), l) == controls.end()) {
      r.extra_lines.push_back(l);
    }
  }
  r.circuit = std::move(circuit);
  r.controls = std::move(controls);
  r.target = target;
  r.garbage_reported = garbage;
  r.strategy = std::move(strategy);
  return r;
}

Cost saturating_gray_cost(unsigned k) {
  if (k >= 62) return std::numeric_limits<Cost>::max() / 8;
  return formula_cost(Formula::Lemma71, k);
}

enum class PieceMethod { Toffoli3, GrayCode, Ladder };

struct PieceChoice {
  PieceMethod method;
  Cost cost;
};

// One sub-MCT of the split construction with k controls on a host of
// `host_width` lines, `spare` of which are idle and may be borrowed. Ladder
// pieces are bounded by floor(host_width / 2) controls.
PieceChoice best_piece(unsigned k, unsigned host_width, unsigned spare) {
  if (k <= 2) return {PieceMethod::Toffoli3, 5};
  PieceChoice best{PieceMethod::GrayCode, saturating_gray_cost(k)};
  const bool ladder_fits =
      host_width >= 5 && k - 2 <= spare && k <= host_width / 2;
  if (ladder_fits) {
    const Cost ladder = formula_cost(Formula::Lemma72Peres, k);
    if (ladder < best.cost) best = {PieceMethod::Ladder, ladder};
  }
  return best;
}

Circuit build_piece(
    PieceMethod method, std::span<const LineIndex> controls, LineIndex target,
    std::span<const LineIndex> spare, unsigned width, LadderVariant variant) {
  switch (method) {
    case PieceMethod::Toffoli3: {
      Circuit c(width);
      c.append(Gate::ccx(controls[0], controls[1], target));
      return c;
    }
    case PieceMethod::GrayCode:
      return gray_code_network(controls, target, width);
    case PieceMethod::Ladder:
      return ladder_network(
          controls, target, spare.first(controls.size() - 2), width, variant);
  }
  throw std::logic_error("unknown piece method");
}

struct SplitPlan {
  unsigned m1;
  unsigned m2;
  PieceChoice first;
  PieceChoice second;
  Cost cost() const { return 2 * first.cost + 2 * second.cost; }
};

SplitPlan plan_split(unsigned m, unsigned m1) {
  const unsigned m2 = m + 1 - m1;
  const unsigned width = m + 2;
  // A's idle lines: the m2-1 controls it does not use plus the target.
  // B's idle lines: the m1 controls consumed by A.
  return {m1, m2, best_piece(m1, width, m2), best_piece(m2, width, m1)};
}

// A, B, A, B on m+2 lines with b = m+1.
Circuit assemble_split(
    unsigned m, unsigned m1, PieceMethod first, PieceMethod second,
    LadderVariant variant) {
  const unsigned width = m + 2;
  const LineIndex target = m;
  const LineIndex b = m + 1;

  std::vector<LineIndex> a_controls = iota_lines(0, m1);
  std::vector<LineIndex> a_spare = iota_lines(m1, m - m1);
  a_spare.push_back(target);

  std::vector<LineIndex> b_controls = iota_lines(m1, m - m1);
  b_controls.push_back(b);
  const std::vector<LineIndex> b_spare = iota_lines(0, m1);

  const Circuit a = build_piece(first, a_controls, b, a_spare, width, variant);
  const Circuit bb =
      build_piece(second, b_controls, target, b_spare, width, variant);
  Circuit out(width);
  out.append(a);
  out.append(bb);
  out.append(a);
  out.append(bb);
  return out;
}

}  // namespace

std::vector<LineIndex> SynthesisResult::main_lines() const {
  std::vector<LineIndex> out = controls;
  out.push_back(target);
  return out;
}

Circuit expand_peres(
    LineIndex x1, LineIndex x2, LineIndex x3, bool inverted, unsigned width) {
  require_distinct({x1, x2, x3});
  Circuit c(minimal_width({x1, x2, x3}, width));
  // x3 picks up V^(x2) V^-(x1^x2) V^(x1) = X^(x1 x2); x2 ends as x1^x2.
  if (!inverted) {
    c.append(Gate::cv(x2, x3));
    c.append(Gate::cx(x1, x2));
    c.append(Gate::cvd(x2, x3));
    c.append(Gate::cv(x1, x3));
  } else {
    c.append(Gate::cvd(x1, x3));
    c.append(Gate::cv(x2, x3));
    c.append(Gate::cx(x1, x2));
    c.append(Gate::cvd(x2, x3));
  }
  return c;
}

Circuit expand_toffoli3(
    LineIndex c1, LineIndex c2, LineIndex target, unsigned width) {
  require_distinct({c1, c2, target});
  Circuit c(minimal_width({c1, c2, target}, width));
  c.append(Gate::cv(c1, target));
  c.append(Gate::cx(c1, c2));
  c.append(Gate::cvd(c2, target));
  c.append(Gate::cx(c1, c2));
  c.append(Gate::cv(c2, target));
  return c;
}

Circuit expand(const Circuit& circuit) {
  Circuit out(circuit.width());
  if (circuit.roles()) out.set_roles(*circuit.roles());
  const unsigned w = circuit.width();
  for (const Gate& g : circuit.gates()) {
    const auto l = g.lines();
    switch (g.kind()) {
      case GateKind::CCX:
        out.append(expand_toffoli3(l[0], l[1], l[2], w));
        break;
      case GateKind::Peres:
        out.append(expand_peres(l[0], l[1], l[2], false, w));
        break;
      case GateKind::IPeres:
        out.append(expand_peres(l[0], l[1], l[2], true, w));
        break;
      case GateKind::MCT: {
        const auto controls = g.controls();
        if (controls.empty()) {
          out.append(Gate::x(g.target()));
        } else if (controls.size() == 1) {
          out.append(Gate::cx(controls[0], g.target()));
        } else if (controls.size() == 2) {
          out.append(expand_toffoli3(controls[0], controls[1], g.target(), w));
        } else {
          out.append(gray_code_network(controls, g.target(), w));
        }
        break;
      }
      default:
        out.append(g);
    }
  }
  return out;
}

Circuit peres_to_toffoli_cnot(const Circuit& circuit) {
  Circuit out(circuit.width());
  if (circuit.roles()) out.set_roles(*circuit.roles());
  for (const Gate& g : circuit.gates()) {
    const auto l = g.lines();
    if (g.kind() == GateKind::Peres) {
      out.append(Gate::ccx(l[0], l[1], l[2]));
      out.append(Gate::cx(l[0], l[1]));
    } else if (g.kind() == GateKind::IPeres) {
      out.append(Gate::cx(l[0], l[1]));
      out.append(Gate::ccx(l[0], l[1], l[2]));
    } else {
      out.append(g);
    }
  }
  return out;
}

Circuit gray_code_network(
    std::span<const LineIndex> controls, LineIndex target, unsigned width) {
  const unsigned m = static_cast<unsigned>(controls.size());
  if (m < 2) {
    throw Error(ErrorCode::OutOfRange, "gray-code network needs >= 2 controls");
  }
  if (m >= 32) {
    throw Error(ErrorCode::OutOfRange, "gray-code network limited to 31 controls");
  }
  require_in_width(controls, width);
  require_in_width(std::span<const LineIndex>(&target, 1), width);

  const unsigned k = m - 1;
  // held[i] is the subset of controls whose parity line i currently carries.
  std::vector<std::uint32_t> held(m);
  for (unsigned i = 0; i < m; ++i) held[i] = 1u << i;

  Circuit c(width);
  const std::uint32_t count = 1u << m;
  for (std::uint32_t j = 1; j < count; ++j) {
    const std::uint32_t subset = j ^ (j >> 1);
    const unsigned lead = static_cast<unsigned>(std::bit_width(subset)) - 1;
    const std::uint32_t missing = held[lead] ^ subset;
    if (missing != 0) {
      const unsigned from = static_cast<unsigned>(std::countr_zero(missing));
      if (!std::has_single_bit(missing) || held[from] != missing) {
        throw std::logic_error("gray-code schedule lost its invariant");
      }
      c.append(Gate::cx(controls[from], controls[lead]));
      held[lead] = subset;
    }
    if (std::popcount(subset) % 2 == 1) {
      c.append(Gate::crx(controls[lead], target, k));
    } else {
      c.append(Gate::crxd(controls[lead], target, k));
    }
  }
  return c;
}

Circuit ladder_network(
    std::span<const LineIndex> controls, LineIndex target,
    std::span<const LineIndex> ancillas, unsigned width, LadderVariant variant) {
  const unsigned m = static_cast<unsigned>(controls.size());
  if (width < 5) {
    throw Error(ErrorCode::OutOfRange, "ladder needs a network of >= 5 lines");
  }
  if (m < 3 || m > (width + 1) / 2) {
    throw Error(
        ErrorCode::OutOfRange,
        "ladder needs 3 <= m <= ceil(n/2); got m=" + std::to_string(m) +
            " n=" + std::to_string(width));
  }
  if (ancillas.size() != m - 2) {
    throw Error(
        ErrorCode::OutOfRange,
        "ladder needs exactly m-2 = " + std::to_string(m - 2) + " ancillas");
  }
  require_in_width(controls, width);
  require_in_width(ancillas, width);
  require_in_width(std::span<const LineIndex>(&target, 1), width);
  {
    const std::set<LineIndex> cs(controls.begin(), controls.end());
    if (cs.size() != controls.size()) {
      throw Error(ErrorCode::DuplicateLine, "repeated control line");
    }
    std::set<LineIndex> all = cs;
    all.insert(target);
    all.insert(ancillas.begin(), ancillas.end());
    if (all.size() != 2 * m - 1) {
      throw Error(
          ErrorCode::LineCollision,
          "controls, target and ancillas must be pairwise distinct");
    }
  }

  // 1-based accessors matching the usual c_1..c_m / a_1..a_(m-2) naming.
  auto c = [&](unsigned i) { return controls[i - 1]; };
  auto a = [&](unsigned i) { return ancillas[i - 1]; };
  struct Triple {
    LineIndex x1, x2, x3;
  };
  // step(1) = (c_m, a_(m-2), t); step(j) = (c_(m-j+1), a_(m-j-1), a_(m-j));
  // step(m-1) = (c_2, c_1, a_1).
  auto step = [&](unsigned j) -> Triple {
    if (j == 1) return {c(m), a(m - 2), target};
    if (j == m - 1) return {c(2), c(1), a(1)};
    return {c(m - j + 1), a(m - j - 1), a(m - j)};
  };

  Circuit out(width);
  auto emit = [&](unsigned j, bool inverse_peres) {
    const Triple t = step(j);
    if (variant == LadderVariant::Toffoli) {
      out.append(Gate::ccx(t.x1, t.x2, t.x3));
    } else if (inverse_peres) {
      out.append(Gate::iperes(t.x1, t.x2, t.x3));
    } else {
      out.append(Gate::peres(t.x1, t.x2, t.x3));
    }
  };
  // Each step occurs twice per pair of blocks; the first occurrence carries
  // its CNOT after the Toffoli and the second before it, so the two CNOTs
  // meet across gates that only share target lines with them.
  for (int block = 0; block < 2; ++block) {
    for (unsigned j = 1; j <= m - 1; ++j) {
      emit(j, block == 1 && (j == 1 || j == m - 1));
    }
    for (unsigned j = m - 2; j >= 2; --j) emit(j, true);
  }
  return out;
}

SynthesisResult lemma71(unsigned m) {
  if (m < 2) throw Error(ErrorCode::OutOfRange, "lemma71 needs m >= 2");
  std::vector<LineIndex> controls = iota_lines(0, m);
  Circuit c = gray_code_network(controls, m, m + 1);
  return finish(std::move(c), std::move(controls), m, 0, "lemma71");
}

SynthesisResult lemma72(unsigned m, unsigned width, LadderVariant variant) {
  if (2 * m - 1 > width) {
    throw Error(
        ErrorCode::OutOfRange,
        "ladder with m=" + std::to_string(m) + " needs " +
            std::to_string(2 * m - 1) + " lines");
  }
  const std::vector<LineIndex> controls = iota_lines(0, m);
  const std::vector<LineIndex> ancillas = iota_lines(m + 1, m >= 2 ? m - 2 : 0);
  return lemma72(m, width, controls, m, ancillas, variant);
}

SynthesisResult lemma72(
    unsigned m, unsigned width, std::span<const LineIndex> controls,
    LineIndex target, std::span<const LineIndex> ancillas,
    LadderVariant variant) {
  if (controls.size() != m) {
    throw Error(ErrorCode::OutOfRange, "control count does not match m");
  }
  Circuit c = ladder_network(controls, target, ancillas, width, variant);
  return finish(
      std::move(c), {controls.begin(), controls.end()}, target, m - 2,
      variant == LadderVariant::Peres ? "lemma72-peres" : "lemma72");
}

SynthesisResult corollary74(unsigned m, LadderVariant variant) {
  if (m < 5) throw Error(ErrorCode::OutOfRange, "corollary74 needs m >= 5");
  const unsigned m1 = (m + 2) / 2;
  Circuit c = assemble_split(
      m, m1, PieceMethod::Ladder, PieceMethod::Ladder, variant);
  return finish(
      std::move(c), iota_lines(0, m), m, 1,
      variant == LadderVariant::Peres ? "cor74-peres" : "cor74");
}

SynthesisResult split_network(unsigned m, unsigned m1) {
  if (m < 3 || m1 < 2 || m1 > m - 1) {
    throw Error(
        ErrorCode::OutOfRange,
        "split needs m >= 3 and 2 <= m1 <= m-1; got m=" + std::to_string(m) +
            " m1=" + std::to_string(m1));
  }
  const SplitPlan plan = plan_split(m, m1);
  Circuit c = assemble_split(
      m, m1, plan.first.method, plan.second.method, LadderVariant::Peres);
  return finish(
      std::move(c), iota_lines(0, m), m, 1,
      "split:" + std::to_string(plan.m1) + "+" + std::to_string(plan.m2));
}

SynthesisResult synthesize(unsigned size, unsigned garbage_budget) {
  if (size == 0) throw Error(ErrorCode::OutOfRange, "size must be >= 1");
  if (size == 1) {
    return finish(Circuit(1, {Gate::x(0)}), {}, 0, 0, "x");
  }
  if (size == 2) {
    return finish(Circuit(2, {Gate::cx(0, 1)}), {0}, 1, 0, "cx");
  }
  if (size == 3) {
    return finish(Circuit(3, {Gate::ccx(0, 1, 2)}), {0, 1}, 2, 0, "ccx");
  }
  if (size > 64) {
    throw Error(ErrorCode::OutOfRange, "size must be <= 64");
  }

  const unsigned m = size - 1;
  enum class Pick { GrayCode, Split, Ladder };
  Pick pick = Pick::GrayCode;
  Cost best = saturating_gray_cost(m);
  unsigned best_m1 = 0;

  // Candidates are visited in order of increasing garbage so that ties keep
  // the construction with fewer extra lines.
  if (garbage_budget >= 1) {
    for (unsigned m1 = 2; m1 + 1 <= m; ++m1) {
      const Cost cost = plan_split(m, m1).cost();
      if (cost < best) {
        best = cost;
        pick = Pick::Split;
        best_m1 = m1;
      }
    }
  }
  if (garbage_budget >= m - 2) {
    const Cost cost = formula_cost(Formula::Lemma72Peres, m);
    if (cost < best) {
      best = cost;
      pick = Pick::Ladder;
    }
  }

  SynthesisResult r;
  switch (pick) {
    case Pick::GrayCode:
      r = lemma71(m);
      break;
    case Pick::Split:
      r = split_network(m, best_m1);
      break;
    case Pick::Ladder:
      r = lemma72(m, 2 * m - 1, LadderVariant::Peres);
      break;
  }
  if (r.cost != best) {
    throw std::logic_error(
        "synthesized cost " + std::to_string(r.cost) +
        " disagrees with planned cost " + std::to_string(best));
  }
  return r;
}

}  // namespace mctsynth
