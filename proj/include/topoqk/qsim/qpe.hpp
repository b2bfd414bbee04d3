// Copyright 2026 The topoqk Authors
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
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "topoqk/qsim/evolution.hpp"
#include "topoqk/qsim/pauli.hpp"
#include "topoqk/qsim/state.hpp"

namespace topoqk::qsim {

/// Measured ancilla registers. Outcome y encodes the phase y / 2^t.
struct PhaseHistogram {
  int t = 0;
  std::map<std::uint64_t, std::int64_t> counts;
  std::int64_t shots = 0;

  /// Most significant ancilla first, so outcome 1 of t = 2 prints "01".
  std::string label(std::uint64_t outcome) const;
  double phase(std::uint64_t outcome) const;
};

struct QpeOptions {
  int ancillas = 6;
  std::int64_t shots = 1000;
  /// U = exp(-i * time * H).
  double time = 1.0;
  EvolutionConfig evolution;
  /// Seeds the shot sampler; product draws use evolution.seed.
  std::uint64_t seed = 0;
};

/// Applies U^{2^rung} to one system block in place.
using RungApplier = std::function<void(std::span<Complex> block, int rung)>;

/// Exact ancilla outcome distribution of the textbook circuit: Hadamards,
/// controlled U^{2^s} on ancilla s, inverse QFT.
std::vector<double> phase_estimation_distribution(const Statevector& initial, int ancillas,
                                                  const RungApplier& apply_rung);

/// Samples `shots` outcomes from `probs` into a histogram.
PhaseHistogram sample_histogram(std::span<const double> probs, int ancillas, std::int64_t shots,
                                Rng& rng);

PhaseHistogram qpe(const Statevector& initial, const PauliSum& h, const QpeOptions& opts);
/// Exact method uses the matrix directly; others decompose it first.
PhaseHistogram qpe(const Statevector& initial, const HermitianOperator& h, const QpeOptions& opts);

/// Fraction of shots with the all-zeros outcome.
double zero_phase_fraction(const PhaseHistogram& h);

/// In-place inverse QFT on qubits [first, first + count) of a register,
/// built from Hadamards, controlled phases and swaps.
void inverse_qft(std::span<Complex> amps, unsigned first, unsigned count);

}  // namespace topoqk::qsim
