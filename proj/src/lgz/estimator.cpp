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

#include "topoqk/lgz/estimator.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <unordered_map>

#include "topoqk/errors.hpp"
#include "topoqk/qsim/qpe.hpp"

namespace topoqk::lgz {

namespace {

void check_clique_dimension(const tda::SimplicialComplex& s, std::size_t k) {
  if (static_cast<int>(k) + 1 > s.max_dim() && s.clique_truncated())
    throw InputError("complex must carry simplices up to dimension " + std::to_string(k + 1) +
                     " to estimate beta_" + std::to_string(k));
}

bool in_zero_bin(std::uint64_t y, int ancillas, int half_width) {
  const std::uint64_t outcomes = std::uint64_t{1} << ancillas;
  const std::uint64_t dist = std::min(y, outcomes - y);
  return dist <= static_cast<std::uint64_t>(half_width);
}

LgzEstimate finish(std::size_t k, std::size_t cliques, std::int64_t zeros, std::int64_t shots,
                   double rescale) {
  LgzEstimate e;
  e.k = k;
  e.clique_count = cliques;
  e.zero_count = zeros;
  e.shots = shots;
  e.rescale_factor = rescale;
  e.beta_estimate = static_cast<double>(zeros) * static_cast<double>(cliques) / static_cast<double>(shots);
  return e;
}

// Full circuit per clique state, with an idle weight register above the
// system qubits holding |k+1>.
LgzEstimate gate_level_estimate(const ZeroPhaseModel& model, const tda::CliqueSet& cliques,
                                const LgzConfig& cfg) {
  const unsigned n = model.terms().num_qubits;
  const auto tag_qubits = static_cast<unsigned>(std::bit_width(static_cast<unsigned>(n)));
  qsim::PauliSum padded = model.terms();
  padded.num_qubits = n + tag_qubits;

  auto mixture = prepare_clique_mixture(cliques, derive_seed(cfg.seed, {tag("mixture")}));
  std::map<tda::VertexMask, std::int64_t> draws;
  for (std::int64_t s = 0; s < cfg.shots; ++s) ++draws[mixture.draw()];

  std::int64_t zeros = 0;
  for (auto [j, count] : draws) {
    qsim::QpeOptions opts;
    opts.ancillas = cfg.ancillas;
    opts.shots = count;
    opts.evolution = cfg.evolution;
    opts.seed = derive_seed(cfg.seed, {tag("shots"), j});
    const std::uint64_t input = (static_cast<std::uint64_t>(cliques.order + 1) << n) | j;
    const auto hist = qsim::qpe(qsim::Statevector::basis(padded.num_qubits, input), padded, opts);
    for (auto [y, c] : hist.counts)
      if (in_zero_bin(y, cfg.ancillas, cfg.zero_bin_half_width)) zeros += c;
  }
  return finish(cliques.order, cliques.size(), zeros, cfg.shots, model.rescale());
}

}  // namespace

tda::CliqueSet clique_states(const tda::SimplicialComplex& s, std::size_t k) {
  tda::CliqueSet cl;
  cl.order = k;
  cl.num_vertices = s.num_vertices();
  for (const auto& simplex : s.simplices(k)) cl.members.push_back(tda::to_mask(simplex));
  std::sort(cl.members.begin(), cl.members.end());
  return cl;
}

void validate(const LgzConfig& cfg) {
  if (cfg.ancillas < 1 || cfg.ancillas > 20) throw InputError("t must be in [1, 20]");
  if (cfg.shots < 1) throw InputError("shots must be >= 1");
  if (cfg.zero_bin_half_width < 0) throw InputError("zero-bin half-width must be >= 0");
  qsim::validate(cfg.evolution);
}

CliqueMixture::CliqueMixture(const tda::CliqueSet& cliques, std::uint64_t seed)
    : members_(cliques.members), num_qubits_(static_cast<unsigned>(cliques.num_vertices)), rng_(seed) {
  if (members_.empty()) throw InputError("clique set is empty");
}

qsim::Statevector CliqueMixture::draw_state() { return qsim::Statevector::basis(num_qubits_, draw()); }

CliqueMixture prepare_clique_mixture(const tda::CliqueSet& cliques, std::uint64_t seed) {
  return CliqueMixture(cliques, seed);
}

LgzEstimate lgz_estimate(const ZeroPhaseModel& model, const tda::CliqueSet& cliques,
                         const LgzConfig& cfg) {
  validate(cfg);
  if (cliques.empty()) return LgzEstimate{cliques.order, 0, 0, 0, 0.0, model.rescale()};
  if (cfg.weight_register) return gate_level_estimate(model, cliques, cfg);

  auto mixture = prepare_clique_mixture(cliques, derive_seed(cfg.seed, {tag("mixture")}));
  Rng shots(derive_seed(cfg.seed, {tag("shots")}));
  std::unordered_map<tda::VertexMask, double> cache;
  std::int64_t zeros = 0;
  for (std::int64_t s = 0; s < cfg.shots; ++s) {
    const tda::VertexMask j = mixture.draw();
    if (model.redraws_per_shot()) {
      zeros += model.shot(j, shots);
      continue;
    }
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, model.probability(j)).first;
    zeros += shots.bernoulli(it->second);
  }
  return finish(cliques.order, cliques.size(), zeros, cfg.shots, model.rescale());
}

LgzEstimate lgz_estimate(const tda::SimplicialComplex& s, const tda::SkeletonGraph& g,
                         std::size_t k, const LgzConfig& cfg) {
  validate(cfg);
  if (g.size() != s.num_vertices()) throw InputError("graph and complex vertex counts differ");
  check_clique_dimension(s, k);
  tda::CliqueSet cliques;
  if (k + 1 <= g.size()) cliques = tda::enumerate_cliques(g, k)[k];
  cliques.order = k;
  cliques.num_vertices = g.size();
  if (cliques.empty()) return LgzEstimate{k, 0, 0, 0, 0.0, 1.0};
  if (cliques.members != clique_states(s, k).members)
    throw InputError("complex is not the clique complex of the graph at order " + std::to_string(k));
  const ZeroPhaseModel model(DiracOperator(s), cfg.ancillas, cfg.evolution, cfg.zero_bin_half_width);
  return lgz_estimate(model, cliques, cfg);
}

double mean_zero_probability(const ZeroPhaseModel& model, const tda::CliqueSet& cliques) {
  if (cliques.empty()) return 1.0;
  double sum = 0.0;
  for (auto j : cliques.members) sum += model.probability(j);
  return sum / static_cast<double>(cliques.size());
}

double exact_zero_phase_probability(const tda::SimplicialComplex& s, std::size_t k, int ancillas,
                                    const qsim::EvolutionConfig& evolution, int zero_bin_half_width) {
  check_clique_dimension(s, k);
  const ZeroPhaseModel model(DiracOperator(s), ancillas, evolution, zero_bin_half_width);
  return mean_zero_probability(model, clique_states(s, k));
}

}  // namespace topoqk::lgz
