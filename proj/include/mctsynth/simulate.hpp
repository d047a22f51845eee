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

#include <complex>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string_view>

#include <Eigen/Dense>

#include "mctsynth/circuit.hpp"

namespace mctsynth {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;

/// Widest circuit for which a dense 2^n x 2^n unitary is built.
inline constexpr unsigned kDenseWidthLimit = 11;
/// Widest circuit accepted by per-basis-state propagation.
inline constexpr unsigned kBasisWidthLimit = 16;

inline constexpr double kUnitaryTolerance = 1e-9;
inline constexpr double kPermutationTolerance = 1e-12;

/// V = ((1+i)/2) [[1, -i], [-i, 1]], the square root of X.
Matrix2 v_matrix();

/// Principal 2^k-th root of X: |+><+| + exp(i*pi/2^k) |-><-|.
Matrix2 root_of_x(unsigned k);

/// Dense operator of a circuit. Row and column index basis states with line 0
/// as the most significant bit.
class DenseUnitary {
 public:
  DenseUnitary(unsigned width, Eigen::MatrixXcd matrix)
      : width_(width), matrix_(std::move(matrix)) {}

  static DenseUnitary identity(unsigned width);

  unsigned width() const noexcept { return width_; }
  Eigen::Index dimension() const noexcept { return matrix_.rows(); }
  const Eigen::MatrixXcd& matrix() const noexcept { return matrix_; }

  /// Largest elementwise deviation of U U^dagger from the identity.
  double unitarity_error() const;

  /// Largest elementwise |this - other|; dimensions must agree.
  double max_deviation(const DenseUnitary& other) const;

 private:
  unsigned width_;
  Eigen::MatrixXcd matrix_;
};

/// Applies one gate to a full state vector of 2^width amplitudes. Macro gates
/// act through their defining semantics, not through an expansion.
void apply_gate(const Gate& gate, unsigned width, std::span<Complex> state);

/// Product of the gate operators in application order. Throws
/// Error(WidthLimitExceeded) above `width_limit`.
DenseUnitary unitary(
    const Circuit& circuit, unsigned width_limit = kDenseWidthLimit);

/// Dense permutation operator of MCT(controls -> target) on `width` lines.
DenseUnitary mct_unitary(
    unsigned width, std::span<const LineIndex> controls, LineIndex target);

/// Scales `u` so that its first row-major entry of magnitude > 1e-6 becomes
/// real positive. Throws Error(ZeroMatrix) if there is none.
DenseUnitary global_phase_normalize(const DenseUnitary& u);

/// Result of pushing a single basis state through a circuit.
struct BasisOutcome {
  /// True iff the output is one basis state with |amplitude| = 1 within
  /// tolerance.
  bool is_basis = false;
  /// The dominant output basis index (the basis state when is_basis).
  std::uint64_t output = 0;
  Complex amplitude{0.0, 0.0};
  /// Number of basis states with non-negligible amplitude.
  std::size_t support_size = 0;
};

/// Sparse state-vector propagation of basis state `input`. Throws
/// Error(WidthLimitExceeded) above kBasisWidthLimit.
BasisOutcome apply_basis(
    const Circuit& circuit, std::uint64_t input,
    double tolerance = kUnitaryTolerance);

/// True iff every gate is in {X, CX, CCX, MCT, PERES, IPERES}.
bool is_permutation_circuit(const Circuit& circuit);

/// Exact bit-level simulation of a permutation-only circuit. Throws
/// Error(ValidationError) if the circuit contains a root-of-X gate.
std::uint64_t permute_basis(const Circuit& circuit, std::uint64_t input);

/// Bit mask of `line` in a basis index of a `width`-line circuit.
constexpr std::uint64_t line_mask(unsigned width, LineIndex line) {
  return std::uint64_t{1} << (width - 1 - line);
}

enum class Verdict { ExactUnitary, MainlineOkWithGarbage, Fail };

std::string_view to_string(Verdict verdict);

struct EquivalenceReport {
  Verdict verdict = Verdict::Fail;
  /// Dense deviation for exact verdicts; otherwise the worst basis-output
  /// amplitude defect (1 - |amplitude|).
  double max_deviation = 0.0;
  /// Lines other than the target whose value differed from the input on at
  /// least one basis input.
  std::set<LineIndex> non_restored_lines;
  /// Every basis input was mapped to a single basis state.
  bool basis_preserving = false;
};

/// Checks `circuit` against MCT(controls -> target). Exact unitary equality
/// (up to global phase) is attempted for widths up to kDenseWidthLimit; every
/// width up to kBasisWidthLimit also gets an exhaustive basis-input check in
/// which lines listed in `extra` may be left changed.
EquivalenceReport check_mct(
    const Circuit& circuit, std::span<const LineIndex> controls,
    LineIndex target, std::span<const LineIndex> extra = {});

}  // namespace mctsynth
