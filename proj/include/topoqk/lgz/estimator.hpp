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

#include "topoqk/lgz/dirac.hpp"
#include "topoqk/lgz/zero_phase.hpp"
#include "topoqk/qsim/evolution.hpp"
#include "topoqk/random.hpp"
#include "topoqk/tda/complex.hpp"
#include "topoqk/tda/graph.hpp"

namespace topoqk::lgz {

struct LgzConfig {
  /// Phase-register size t.
  int ancillas = 6;
  /// Shot count M.
  std::int64_t shots = 1000;
  qsim::EvolutionConfig evolution;
  std::uint64_t seed = 0;
  /// Outcomes within this circular distance of 0 count as phase zero.
  int zero_bin_half_width = 0;
  /// Simulate the full circuit per shot, with a Hamming-weight tag
  /// register of ceil(log2(n + 1)) idle qubits next to the system.
  bool weight_register = false;
};

/// Throws InputError for t < 1, M < 1 or an invalid evolution config.
void validate(const LgzConfig& cfg);

struct LgzEstimate {
  std::size_t k = 0;
  std::size_t clique_count = 0;
  std::int64_t zero_count = 0;
  std::int64_t shots = 0;
  /// (zero_count / shots) * clique_count, or 0 without cliques.
  double beta_estimate = 0.0;
  double rescale_factor = 1.0;
};

/// The k-simplices of `s` as sorted vertex masks.
tda::CliqueSet clique_states(const tda::SimplicialComplex& s, std::size_t k);

/// Uniform sampler over the basis states |j>, j in Cl_k(G).
class CliqueMixture {
 public:
  /// Throws InputError for an empty clique set.
  CliqueMixture(const tda::CliqueSet& cliques, std::uint64_t seed);

  tda::VertexMask draw() { return members_[rng_.below(members_.size())]; }
  qsim::Statevector draw_state();

 private:
  std::vector<tda::VertexMask> members_;
  unsigned num_qubits_;
  Rng rng_;
};

CliqueMixture prepare_clique_mixture(const tda::CliqueSet& cliques, std::uint64_t seed);

/// Estimates beta_k of `s`, the clique complex of `g`, from cfg.shots
/// phase-estimation shots on the clique mixture.
LgzEstimate lgz_estimate(const tda::SimplicialComplex& s, const tda::SkeletonGraph& g,
                         std::size_t k, const LgzConfig& cfg);

/// Same, reusing a model of the complex's operator.
LgzEstimate lgz_estimate(const ZeroPhaseModel& model, const tda::CliqueSet& cliques,
                         const LgzConfig& cfg);

/// Mean zero-bin probability over the clique states of order k, without
/// sampling. Per-shot qDrift uses the exact expectation over products.
double exact_zero_phase_probability(const tda::SimplicialComplex& s, std::size_t k, int ancillas,
                                    const qsim::EvolutionConfig& evolution,
                                    int zero_bin_half_width = 0);

/// The mean of `model.probability` over the clique set (1 when empty).
double mean_zero_probability(const ZeroPhaseModel& model, const tda::CliqueSet& cliques);

}  // namespace topoqk::lgz
