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
#include <span>
#include <vector>

#include <Eigen/SparseCore>

#include "topoqk/qsim/pauli.hpp"
#include "topoqk/qsim/state.hpp"
#include "topoqk/random.hpp"

namespace topoqk::qsim {

enum class EvolutionMethod { exact, trotter, qdrift };

/// Whether a qDrift product is redrawn for every shot or drawn once per run.
enum class QdriftMode { per_shot, fixed_product };

struct EvolutionConfig {
  EvolutionMethod method = EvolutionMethod::exact;
  /// Trotter slice count r, or qDrift sample count N.
  int repetitions = 1;
  std::uint64_t seed = 0;
  double prune_tol = 1e-12;
  QdriftMode qdrift_mode = QdriftMode::per_shot;
};

/// Throws InputError unless repetitions >= 1 and prune_tol >= 0.
void validate(const EvolutionConfig& cfg);

/// exp(-i * angle * P) for the Pauli string (x_mask, z_mask).
struct PauliRotation {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  double angle = 0.0;
};

/// Terms sorted by descending |c|, ties broken by label.
std::vector<PauliTerm> trotter_order(const PauliSum& h);

/// First-order product (prod_j exp(-i time c_j P_j / slices))^slices,
/// listed in application order.
std::vector<PauliRotation> trotter_sequence(const PauliSum& h, double time, long slices);

/// `samples` i.i.d. draws with probability |c_j| / lambda, each
/// exp(-i sign(c_j) lambda time P_j / samples).
std::vector<PauliRotation> qdrift_sequence(const PauliSum& h, double time, long samples, Rng& rng);

void apply_sequence(std::span<Complex> amps, std::span<const PauliRotation> seq);

/// exp(-i time H) v by a truncated Taylor series over short steps.
Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<Complex>& h, double time,
                               const Eigen::VectorXcd& v);

/// Largest register for which dense reference paths are built.
inline constexpr unsigned kDenseQubitLimit = 10;

/// Applies exp(-i time H) approximately or exactly according to `cfg`.
Statevector evolve(const Statevector& state, const PauliSum& h, double time,
                   const EvolutionConfig& cfg);

}  // namespace topoqk::qsim
