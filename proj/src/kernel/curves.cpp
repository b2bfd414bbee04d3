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

#include "topoqk/kernel/curves.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "topoqk/errors.hpp"
#include "topoqk/lgz/dirac.hpp"

namespace topoqk::kernel {

namespace {

using CountMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

void check_clique_dim(const tda::Filtration& f, std::size_t k_max) {
  if (f.clique_dim() < k_max + 1 && f.clique_dim() + 1 < f.num_vertices())
    throw InputError("filtration enumerates simplices up to dimension " + std::to_string(f.clique_dim()) +
                     ", curves up to beta_" + std::to_string(k_max) + " need " + std::to_string(k_max + 1));
}

bool fixed_products(const lgz::LgzConfig& cfg) {
  return cfg.evolution.method == qsim::EvolutionMethod::qdrift &&
         cfg.evolution.qdrift_mode == qsim::QdriftMode::fixed_product;
}

}  // namespace

void BettiCurveMatrix::validate() const {
  if (values.rows() != static_cast<Eigen::Index>(k_max + 1) ||
      values.cols() != static_cast<Eigen::Index>(thresholds.size()))
    throw InputError("curve matrix shape does not match k_max and thresholds");
}

BettiCurveMatrix exact_betti_curves(const tda::Filtration& f, std::size_t k_max) {
  check_clique_dim(f, k_max);
  const auto table = tda::filtration_betti_numbers(f, k_max);
  Eigen::MatrixXd values(static_cast<Eigen::Index>(k_max + 1), static_cast<Eigen::Index>(f.size()));
  for (std::size_t k = 0; k <= k_max; ++k)
    for (std::size_t j = 0; j < f.size(); ++j)
      values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = static_cast<double>(table[k][j]);
  return {k_max, f.thresholds(), std::move(values)};
}

struct LgzCurveEstimator::Cache {
  struct Entry {
    tda::SimplicialComplex complex;
    std::vector<tda::CliqueSet> cliques;
    std::unique_ptr<lgz::DiracOperator> dirac;
    std::unique_ptr<lgz::ZeroPhaseModel> model;
  };
  // Keyed by edge count, which identifies the complex within a filtration.
  std::map<std::size_t, Entry> entries;
};

LgzCurveEstimator::LgzCurveEstimator(const tda::Filtration& f, std::size_t k_max, lgz::LgzConfig cfg)
    : f_(&f), k_max_(k_max), cfg_(std::move(cfg)), cache_(std::make_unique<Cache>()) {
  lgz::validate(cfg_);
  check_clique_dim(f, k_max);
}

LgzCurveEstimator::~LgzCurveEstimator() = default;
LgzCurveEstimator::LgzCurveEstimator(LgzCurveEstimator&&) noexcept = default;
LgzCurveEstimator& LgzCurveEstimator::operator=(LgzCurveEstimator&&) noexcept = default;

LgzCurveDetail LgzCurveEstimator::estimate(std::int64_t shots, std::uint64_t seed) {
  lgz::LgzConfig cfg = cfg_;
  cfg.shots = shots;
  lgz::validate(cfg);
  const auto rows = static_cast<Eigen::Index>(k_max_ + 1), cols = static_cast<Eigen::Index>(f_->size());
  LgzCurveDetail out{{k_max_, f_->thresholds(), Eigen::MatrixXd::Zero(rows, cols)},
                     CountMatrix::Zero(rows, cols),
                     CountMatrix::Zero(rows, cols)};
  visit([&](std::size_t j, std::size_t k, const tda::CliqueSet& cliques, const lgz::ZeroPhaseModel& model) {
    lgz::LgzConfig c = cfg;
    c.seed = derive_seed(seed, {j, k});
    const auto e = lgz::lgz_estimate(model, cliques, c);
    const auto r = static_cast<Eigen::Index>(k), col = static_cast<Eigen::Index>(j);
    out.curve.values(r, col) = e.beta_estimate;
    out.zero_counts(r, col) = e.zero_count;
    out.shots(r, col) = e.shots;
  });
  return out;
}

BettiCurveMatrix LgzCurveEstimator::expected() {
  BettiCurveMatrix out{k_max_, f_->thresholds(),
                       Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k_max_ + 1), static_cast<Eigen::Index>(f_->size()))};
  visit([&](std::size_t j, std::size_t k, const tda::CliqueSet& cliques, const lgz::ZeroPhaseModel& model) {
    out.values(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) =
        lgz::mean_zero_probability(model, cliques) * static_cast<double>(cliques.size());
  });
  return out;
}

void LgzCurveEstimator::visit(
    const std::function<void(std::size_t, std::size_t, const tda::CliqueSet&, const lgz::ZeroPhaseModel&)>& fn) {
  for (std::size_t j = 0; j < f_->size(); ++j) {
    auto [it, inserted] = cache_->entries.try_emplace(f_->edge_count_at(j));
    auto& entry = it->second;
    if (inserted) {
      entry.complex = f_->complex_at(j);
      for (std::size_t k = 0; k <= k_max_; ++k) entry.cliques.push_back(lgz::clique_states(entry.complex, k));
    }
    for (std::size_t k = 0; k <= k_max_; ++k) {
      const auto& cliques = entry.cliques[k];
      if (cliques.empty()) continue;
      if (!entry.dirac) entry.dirac = std::make_unique<lgz::DiracOperator>(entry.complex);
      if (fixed_products(cfg_)) {
        auto evo = cfg_.evolution;
        evo.seed = derive_seed(cfg_.evolution.seed, {j, k});
        fn(j, k, cliques, lgz::ZeroPhaseModel(*entry.dirac, cfg_.ancillas, evo, cfg_.zero_bin_half_width));
        continue;
      }
      if (!entry.model)
        entry.model = std::make_unique<lgz::ZeroPhaseModel>(*entry.dirac, cfg_.ancillas, cfg_.evolution,
                                                            cfg_.zero_bin_half_width);
      fn(j, k, cliques, *entry.model);
    }
  }
}

LgzCurveDetail lgz_betti_curves(const tda::Filtration& f, std::size_t k_max, const lgz::LgzConfig& cfg) {
  return LgzCurveEstimator(f, k_max, cfg).estimate();
}

BettiCurveMatrix expected_lgz_curves(const tda::Filtration& f, std::size_t k_max, const lgz::LgzConfig& cfg) {
  return LgzCurveEstimator(f, k_max, cfg).expected();
}

}  // namespace topoqk::kernel
