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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include <Eigen/Core>

#include "topoqk/lgz/estimator.hpp"
#include "topoqk/tda/filtration.hpp"
#include "topoqk/tda/geometry.hpp"

namespace topoqk::kernel {

/// Betti numbers of a filtration: entry (i, j) is beta_i at threshold j.
struct BettiCurveMatrix {
  std::size_t k_max = 0;
  tda::ThresholdSequence thresholds;
  Eigen::MatrixXd values;

  /// Throws InputError unless the shape is (k_max + 1) x |thresholds|.
  void validate() const;
};

/// Estimator output per curve entry, alongside the curve itself.
struct LgzCurveDetail {
  BettiCurveMatrix curve;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> zero_counts;
  Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> shots;
};

/// LGZ-estimated curves of one filtration. Operator models are built once
/// per distinct complex and reused across estimates with different shot
/// counts or seeds; with per-entry fixed qDrift products they are rebuilt
/// for every entry.
class LgzCurveEstimator {
 public:
  /// `cfg.shots` and `cfg.seed` serve as defaults for `estimate()`.
  LgzCurveEstimator(const tda::Filtration& f, std::size_t k_max, lgz::LgzConfig cfg);
  ~LgzCurveEstimator();
  LgzCurveEstimator(LgzCurveEstimator&&) noexcept;
  LgzCurveEstimator& operator=(LgzCurveEstimator&&) noexcept;

  /// Entry (k, j) draws its shots from derive_seed(seed, {j, k}).
  LgzCurveDetail estimate(std::int64_t shots, std::uint64_t seed);
  LgzCurveDetail estimate() { return estimate(cfg_.shots, cfg_.seed); }

  /// Noise-free counterpart: mean zero-bin probability times clique count.
  BettiCurveMatrix expected();

 private:
  struct Cache;
  void visit(const std::function<void(std::size_t, std::size_t, const tda::CliqueSet&,
                                      const lgz::ZeroPhaseModel&)>& fn);
  const tda::Filtration* f_;
  std::size_t k_max_;
  lgz::LgzConfig cfg_;
  std::unique_ptr<Cache> cache_;
};

/// Exact rational Betti curves.
BettiCurveMatrix exact_betti_curves(const tda::Filtration& f, std::size_t k_max);

/// LgzCurveEstimator(f, k_max, cfg).estimate().
LgzCurveDetail lgz_betti_curves(const tda::Filtration& f, std::size_t k_max, const lgz::LgzConfig& cfg);

/// LgzCurveEstimator(f, k_max, cfg).expected().
BettiCurveMatrix expected_lgz_curves(const tda::Filtration& f, std::size_t k_max,
                                     const lgz::LgzConfig& cfg);

}  // namespace topoqk::kernel
