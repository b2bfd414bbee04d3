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
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "topoqk/lgz/dirac.hpp"
#include "topoqk/qsim/evolution.hpp"
#include "topoqk/random.hpp"

namespace topoqk::lgz {

/// Probability that phase estimation of U = exp(-i B / rescale) reads an
/// outcome in the zero bin, per computational-basis input.
///
/// Reading outcome y leaves the system in T_y|j> with
/// T_y = 2^-t (I + w_{t-1} U_{t-1}) ... (I + w_0 U_0), w_s = exp(-2 pi i 2^s y / 2^t),
/// where U_s is the circuit's realization of U^{2^s}. Registers up to
/// kDenseQubitLimit qubits use dense matrices; for per-shot qDrift the
/// expectation over random products is taken exactly through the
/// recursion O <- E[(I + conj(w) U_s^dag) O (I + w U_s)]. Larger registers
/// propagate single vectors and redraw qDrift products per shot.
class ZeroPhaseModel {
 public:
  /// `zero_bin_half_width` w counts outcomes within circular distance w of 0.
  ZeroPhaseModel(const DiracOperator& b, int ancillas, const qsim::EvolutionConfig& evolution,
                 int zero_bin_half_width = 0);

  double rescale() const { return rescale_; }
  const qsim::PauliSum& terms() const { return terms_; }
  bool dense() const { return dense_; }
  /// True when every shot draws a fresh product and is simulated alone.
  bool redraws_per_shot() const { return !zero_operator_ && !dense_ && per_shot_products(); }

  /// Zero-bin probability for input |basis>; for per-shot qDrift on large
  /// registers, an average over a fixed set of product draws.
  double probability(std::uint64_t basis) const;

  /// One measured shot on input |basis>: true when the register reads zero.
  bool shot(std::uint64_t basis, Rng& rng) const;

 private:
  std::vector<std::uint64_t> zero_bin() const;
  bool per_shot_products() const;
  void build_dense(const DiracOperator& b);
  double vector_probability(std::uint64_t basis, Rng* product_rng) const;

  unsigned n_;
  int t_;
  int half_width_;
  qsim::EvolutionConfig evolution_;
  double rescale_;
  qsim::PauliSum terms_;
  bool dense_;
  bool zero_operator_;
  Eigen::VectorXd dense_probs_;
  Eigen::SparseMatrix<qsim::Complex> sparse_h_;
};

/// Draws at most this many products when averaging large-register qDrift.
inline constexpr int kVectorEnsembleDraws = 256;

}  // namespace topoqk::lgz
