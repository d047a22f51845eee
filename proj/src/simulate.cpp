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

#include "mctsynth/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "mctsynth/error.hpp"

namespace mctsynth {

namespace {

// Every gate reduces to a short list of singly-targeted controlled operations.
struct Step {
  std::uint64_t control_mask = 0;
  std::uint64_t target_mask = 0;
  bool is_x = true;
  Matrix2 matrix = Matrix2::Zero();
};

std::uint64_t mask_of(unsigned width, std::span<const LineIndex> lines) {
  std::uint64_t m = 0;
  for (LineIndex l : lines) m |= line_mask(width, l);
  return m;
}

std::vector<Step> steps_of(const Gate& gate, unsigned width) {
  const auto l = gate.lines();
  auto x_step = [&](std::span<const LineIndex> controls, LineIndex target) {
    return Step{mask_of(width, controls), line_mask(width, target), true,
                Matrix2::Zero()};
  };
  auto root_step = [&](const Matrix2& m) {
    return Step{line_mask(width, l[0]), line_mask(width, l[1]), false, m};
  };
  switch (gate.kind()) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCT:
      return {x_step(gate.controls(), gate.target())};
    case GateKind::CV:
      return {root_step(v_matrix())};
    case GateKind::CVD:
      return {root_step(v_matrix().adjoint())};
    case GateKind::CRX:
      return {root_step(root_of_x(gate.root()))};
    case GateKind::CRXD:
      return {root_step(root_of_x(gate.root()).adjoint())};
    case GateKind::Peres:
      return {x_step(l.first(2), l[2]), x_step(l.first(1), l[1])};
    case GateKind::IPeres:
      return {x_step(l.first(1), l[1]), x_step(l.first(2), l[2])};
  }
  return {};
}

void apply_step(const Step& s, std::span<Complex> state) {
  const std::uint64_t dim = state.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & s.target_mask) != 0 || (i & s.control_mask) != s.control_mask) {
      continue;
    }
    const std::uint64_t j = i | s.target_mask;
    if (s.is_x) {
      std::swap(state[i], state[j]);
    } else {
      const Complex a0 = state[i];
      const Complex a1 = state[j];
      state[i] = s.matrix(0, 0) * a0 + s.matrix(0, 1) * a1;
      state[j] = s.matrix(1, 0) * a0 + s.matrix(1, 1) * a1;
    }
  }
}

// Amplitudes below this are dropped during sparse propagation.
constexpr double kPrune = 1e-14;

void check_width(unsigned width, unsigned limit, const char* what) {
  if (width > limit) {
    throw Error(
        ErrorCode::WidthLimitExceeded,
        std::string(what) + ": width " + std::to_string(width) +
            " exceeds limit " + std::to_string(limit));
  }
}

}  // namespace

Matrix2 v_matrix() {
  const Complex h(0.5, 0.5);
  const Complex i(0.0, 1.0);
  Matrix2 v;
  v << h, -i * h, -i * h, h;
  return v;
}

Matrix2 root_of_x(unsigned k) {
  const double angle = std::numbers::pi / std::ldexp(1.0, static_cast<int>(k));
  const Complex w = std::polar(1.0, angle);
  Matrix2 r;
  r << 0.5 * (1.0 + w), 0.5 * (1.0 - w), 0.5 * (1.0 - w), 0.5 * (1.0 + w);
  return r;
}

DenseUnitary DenseUnitary::identity(unsigned width) {
  const Eigen::Index dim = Eigen::Index{1} << width;
  return DenseUnitary(width, Eigen::MatrixXcd::Identity(dim, dim));
}

double DenseUnitary::unitarity_error() const {
  const Eigen::MatrixXcd p = matrix_ * matrix_.adjoint();
  return (p - Eigen::MatrixXcd::Identity(p.rows(), p.cols()))
      .cwiseAbs()
      .maxCoeff();
}

double DenseUnitary::max_deviation(const DenseUnitary& other) const {
  if (other.dimension() != dimension()) {
    throw Error(ErrorCode::ValidationError, "unitary dimensions differ");
  }
  if (dimension() == 0) return 0.0;
  return (matrix_ - other.matrix_).cwiseAbs().maxCoeff();
}

void apply_gate(const Gate& gate, unsigned width, std::span<Complex> state) {
  for (const Step& s : steps_of(gate, width)) apply_step(s, state);
}

DenseUnitary unitary(const Circuit& circuit, unsigned width_limit) {
  validate(circuit);
  check_width(circuit.width(), width_limit, "dense unitary");
  const unsigned width = circuit.width();
  std::vector<Step> steps;
  for (const Gate& g : circuit.gates()) {
    auto s = steps_of(g, width);
    steps.insert(steps.end(), s.begin(), s.end());
  }
  DenseUnitary u = DenseUnitary::identity(width);
  Eigen::MatrixXcd m = u.matrix();
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    std::span<Complex> column(m.col(col).data(), static_cast<std::size_t>(m.rows()));
    for (const Step& s : steps) apply_step(s, column);
  }
  return DenseUnitary(width, std::move(m));
}

DenseUnitary mct_unitary(
    unsigned width, std::span<const LineIndex> controls, LineIndex target) {
  Circuit c(width);
  c.append(Gate::mct({controls.begin(), controls.end()}, target));
  return unitary(c);
}

DenseUnitary global_phase_normalize(const DenseUnitary& u) {
  const auto& m = u.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex e = m(r, c);
      if (std::abs(e) > 1e-6) {
        const Complex phase = std::conj(e) / std::abs(e);
        return DenseUnitary(u.width(), m * phase);
      }
    }
  }
  throw Error(ErrorCode::ZeroMatrix, "no entry of magnitude > 1e-6");
}

BasisOutcome apply_basis(
    const Circuit& circuit, std::uint64_t input, double tolerance) {
  validate(circuit);
  check_width(circuit.width(), kBasisWidthLimit, "basis propagation");
  const unsigned width = circuit.width();
  if (input >= (std::uint64_t{1} << width)) {
    throw Error(ErrorCode::IndexOutOfRange, "basis input outside state space");
  }

  std::unordered_map<std::uint64_t, Complex> state{{input, Complex(1.0, 0.0)}};
  std::unordered_map<std::uint64_t, Complex> next;
  for (const Gate& g : circuit.gates()) {
    for (const Step& s : steps_of(g, width)) {
      next.clear();
      for (const auto& [index, amp] : state) {
        if ((index & s.control_mask) != s.control_mask) {
          next[index] += amp;
        } else if (s.is_x) {
          next[index ^ s.target_mask] += amp;
        } else {
          const int bit = (index & s.target_mask) ? 1 : 0;
          const std::uint64_t base = index & ~s.target_mask;
          next[base] += s.matrix(0, bit) * amp;
          next[base | s.target_mask] += s.matrix(1, bit) * amp;
        }
      }
      std::erase_if(next, [](const auto& kv) {
        return std::abs(kv.second) < kPrune;
      });
      std::swap(state, next);
    }
  }

  BasisOutcome out;
  double best = -1.0;
  for (const auto& [index, amp] : state) {
    if (std::abs(amp) > tolerance) ++out.support_size;
    // Ties go to the smaller index so the result is deterministic.
    if (std::abs(amp) > best ||
        (std::abs(amp) == best && index < out.output)) {
      best = std::abs(amp);
      out.output = index;
      out.amplitude = amp;
    }
  }
  out.is_basis = out.support_size == 1 && std::abs(1.0 - best) <= tolerance;
  return out;
}

bool is_permutation_circuit(const Circuit& circuit) {
  return std::all_of(
      circuit.gates().begin(), circuit.gates().end(),
      [](const Gate& g) { return is_permutation_kind(g.kind()); });
}

std::uint64_t permute_basis(const Circuit& circuit, std::uint64_t input) {
  const unsigned width = circuit.width();
  if (width > 64) {
    throw Error(ErrorCode::WidthLimitExceeded, "permutation simulator: > 64 lines");
  }
  std::uint64_t state = input;
  for (const Gate& g : circuit.gates()) {
    if (!is_permutation_kind(g.kind())) {
      throw Error(
          ErrorCode::ValidationError,
          "permutation simulator cannot apply " + std::string(to_string(g.kind())));
    }
    for (const Step& s : steps_of(g, width)) {
      if ((state & s.control_mask) == s.control_mask) state ^= s.target_mask;
    }
  }
  return state;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::ExactUnitary:
      return "exact_unitary";
    case Verdict::MainlineOkWithGarbage:
      return "mainline_ok_with_garbage";
    case Verdict::Fail:
      return "fail";
  }
  return "fail";
}

EquivalenceReport check_mct(
    const Circuit& circuit, std::span<const LineIndex> controls,
    LineIndex target, std::span<const LineIndex> extra) {
  validate(circuit);
  const unsigned width = circuit.width();
  check_width(width, kBasisWidthLimit, "check_mct");
  for (LineIndex c : controls) {
    if (c >= width || c == target) {
      throw Error(ErrorCode::IndexOutOfRange, "bad control line " + std::to_string(c));
    }
  }
  if (target >= width) {
    throw Error(ErrorCode::IndexOutOfRange, "bad target line " + std::to_string(target));
  }

  const std::uint64_t control_mask = mask_of(width, controls);
  const std::uint64_t target_mask = line_mask(width, target);
  const std::uint64_t main_mask = control_mask | target_mask;
  const bool exact_bits = is_permutation_circuit(circuit);

  EquivalenceReport report;
  report.basis_preserving = true;
  bool mainline_ok = true;
  std::uint64_t changed = 0;
  double defect = 0.0;

  const std::uint64_t dim = std::uint64_t{1} << width;
  for (std::uint64_t in = 0; in < dim; ++in) {
    std::uint64_t out = 0;
    if (exact_bits) {
      out = permute_basis(circuit, in);
    } else {
      const BasisOutcome o = apply_basis(circuit, in);
      defect = std::max(defect, std::abs(1.0 - std::abs(o.amplitude)));
      if (!o.is_basis) {
        report.basis_preserving = false;
        mainline_ok = false;
        continue;
      }
      out = o.output;
    }
    const std::uint64_t expected =
        (in & control_mask) == control_mask ? in ^ target_mask : in;
    const std::uint64_t diff = out ^ expected;
    changed |= diff & ~target_mask;
    if ((diff & main_mask) != 0) mainline_ok = false;
  }
  for (LineIndex l = 0; l < width; ++l) {
    if (changed & line_mask(width, l)) report.non_restored_lines.insert(l);
  }

  if (width <= kDenseWidthLimit && mainline_ok &&
      report.non_restored_lines.empty()) {
    const DenseUnitary u = global_phase_normalize(unitary(circuit));
    const DenseUnitary expected =
        global_phase_normalize(mct_unitary(width, controls, target));
    const double dev = u.max_deviation(expected);
    if (dev <= kUnitaryTolerance) {
      report.verdict = Verdict::ExactUnitary;
      report.max_deviation = dev;
      return report;
    }
  }

  report.max_deviation = defect;
  const std::set<LineIndex> allowed(extra.begin(), extra.end());
  const bool garbage_allowed = std::all_of(
      report.non_restored_lines.begin(), report.non_restored_lines.end(),
      [&](LineIndex l) { return allowed.count(l) != 0; });
  report.verdict = mainline_ok && garbage_allowed ? Verdict::MainlineOkWithGarbage
                                                  : Verdict::Fail;
  return report;
}

}  // namespace mctsynth
