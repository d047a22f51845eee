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

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "mctsynth/circuit.hpp"
#include "mctsynth/simulate.hpp"

namespace mctsynth::testkit {

/// Distinct lines drawn uniformly from [0, width).
inline std::vector<LineIndex> pick_lines(
    std::mt19937& rng, unsigned width, unsigned count) {
  std::vector<LineIndex> all(width);
  std::iota(all.begin(), all.end(), 0u);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

/// A random well-formed gate. Gate kinds needing more lines than `width`
/// are skipped.
inline Gate random_gate(std::mt19937& rng, unsigned width) {
  std::uniform_int_distribution<int> kind_dist(0, 9);
  for (;;) {
    const auto kind = static_cast<GateKind>(kind_dist(rng));
    switch (kind) {
      case GateKind::X:
        return Gate::x(pick_lines(rng, width, 1)[0]);
      case GateKind::CX:
      case GateKind::CV:
      case GateKind::CVD:
      case GateKind::CRX:
      case GateKind::CRXD: {
        if (width < 2) continue;
        const auto l = pick_lines(rng, width, 2);
        const unsigned k = std::uniform_int_distribution<unsigned>(1, 4)(rng);
        if (kind == GateKind::CX) return Gate::cx(l[0], l[1]);
        if (kind == GateKind::CV) return Gate::cv(l[0], l[1]);
        if (kind == GateKind::CVD) return Gate::cvd(l[0], l[1]);
        if (kind == GateKind::CRX) return Gate::crx(l[0], l[1], k);
        return Gate::crxd(l[0], l[1], k);
      }
      case GateKind::CCX:
      case GateKind::Peres:
      case GateKind::IPeres: {
        if (width < 3) continue;
        const auto l = pick_lines(rng, width, 3);
        if (kind == GateKind::CCX) return Gate::ccx(l[0], l[1], l[2]);
        if (kind == GateKind::Peres) return Gate::peres(l[0], l[1], l[2]);
        return Gate::iperes(l[0], l[1], l[2]);
      }
      case GateKind::MCT: {
        const unsigned n =
            std::uniform_int_distribution<unsigned>(1, width)(rng);
        auto l = pick_lines(rng, width, n);
        const LineIndex t = l.back();
        l.pop_back();
        return Gate::mct(std::move(l), t);
      }
    }
  }
}

inline Circuit random_circuit(
    std::mt19937& rng, unsigned width, unsigned length) {
  Circuit c(width);
  for (unsigned i = 0; i < length; ++i) c.append(random_gate(rng, width));
  return c;
}

/// Random circuit restricted to self-inverse controlled-X gates and CV/CVD,
/// which gives the cancellation pass plenty of candidate pairs.
inline Circuit random_cancellable_circuit(
    std::mt19937& rng, unsigned width, unsigned length) {
  Circuit c(width);
  std::uniform_int_distribution<int> pick(0, 4);
  for (unsigned i = 0; i < length; ++i) {
    switch (pick(rng)) {
      case 0:
        c.append(Gate::x(pick_lines(rng, width, 1)[0]));
        break;
      case 1: {
        const auto l = pick_lines(rng, width, 2);
        c.append(Gate::cx(l[0], l[1]));
        break;
      }
      case 2: {
        const auto l = pick_lines(rng, width, 3);
        c.append(Gate::ccx(l[0], l[1], l[2]));
        break;
      }
      case 3: {
        const auto l = pick_lines(rng, width, 2);
        c.append(Gate::cv(l[0], l[1]));
        break;
      }
      default: {
        const auto l = pick_lines(rng, width, 2);
        c.append(Gate::cvd(l[0], l[1]));
        break;
      }
    }
  }
  return c;
}

/// Test-only permutation-matrix builder: `fn` maps the input bit vector
/// (bits[l] is the value of line l) to the output bit vector. Independent of
/// the library simulator.
inline Eigen::MatrixXcd reference_permutation(
    unsigned width,
    const std::function<std::vector<int>(std::vector<int>)>& fn) {
  const std::size_t dim = std::size_t{1} << width;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(
      static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t in = 0; in < dim; ++in) {
    std::vector<int> bits(width);
    for (unsigned l = 0; l < width; ++l) bits[l] = (in >> (width - 1 - l)) & 1;
    const std::vector<int> outbits = fn(bits);
    std::size_t out = 0;
    for (unsigned l = 0; l < width; ++l) {
      out = (out << 1) | static_cast<std::size_t>(outbits[l]);
    }
    m(static_cast<Eigen::Index>(out), static_cast<Eigen::Index>(in)) = 1.0;
  }
  return m;
}

/// Reference MCT permutation on `width` lines.
inline Eigen::MatrixXcd reference_mct(
    unsigned width, const std::vector<LineIndex>& controls, LineIndex target) {
  return reference_permutation(width, [&](std::vector<int> b) {
    bool all = true;
    for (LineIndex c : controls) all = all && b[c] == 1;
    if (all) b[target] ^= 1;
    return b;
  });
}

/// Max |a - b| after removing global phase from both.
inline double phase_free_distance(
    const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  const unsigned width = 0;
  const DenseUnitary na = global_phase_normalize(DenseUnitary(width, a));
  const DenseUnitary nb = global_phase_normalize(DenseUnitary(width, b));
  return (na.matrix() - nb.matrix()).cwiseAbs().maxCoeff();
}

}  // namespace mctsynth::testkit
