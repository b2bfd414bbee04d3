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
#include <string>
#include <vector>

#include "topoqk/kernel/kernels.hpp"
#include "topoqk/qsim/evolution.hpp"
#include "topoqk/shapes/dataset.hpp"

namespace topoqk::shapes {

enum class KernelFamily { topological, rbf, laplacian, polynomial };

struct KernelSpec {
  KernelFamily family = KernelFamily::topological;
  /// gamma for topological/rbf/laplacian, degree for polynomial.
  double hyper = 1.0;
  /// Minkowski exponent of the topological kernel.
  double p = 2.0;

  std::string name() const;
};

KernelFamily family_from_name(const std::string& name);

/// Topological gamma 1 with p 2; rbf and laplacian with gamma in
/// {1e-4, ..., 1}; polynomial degrees 1..5.
std::vector<KernelSpec> default_kernel_grid();

struct AccuracyConfig {
  std::size_t items = 100;
  std::vector<std::size_t> points = {5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  std::vector<KernelSpec> kernels = default_kernel_grid();
  double split_ratio = 0.7;
  double c = 1.0;
  std::size_t k_max = 2;
  std::vector<std::uint64_t> seeds = {1};

  void validate() const;
};

struct AccuracyRow {
  std::string kernel;
  double hyper = 0.0;
  std::size_t n_points = 0;
  double accuracy = 0.0;
  std::uint64_t seed = 0;
  /// Smallest Gram eigenvalue (reported for every kernel).
  double min_eigenvalue = 0.0;
  bool svm_converged = true;
};

/// One row per (seed, points, kernel), in that nesting order.
std::vector<AccuracyRow> experiment_accuracy(const AccuracyConfig& cfg);

struct SimulationSpec {
  qsim::EvolutionMethod method = qsim::EvolutionMethod::trotter;
  int repetitions = 2;
};

std::string method_name(qsim::EvolutionMethod method);
qsim::EvolutionMethod method_from_name(const std::string& name);

struct RmseConfig {
  std::size_t items = 20;
  std::size_t points = 5;
  std::size_t k_max = 2;
  int ancillas = 6;
  std::uint64_t dataset_seed = 1;
  std::vector<SimulationSpec> simulations = {{qsim::EvolutionMethod::trotter, 2},
                                             {qsim::EvolutionMethod::trotter, 3},
                                             {qsim::EvolutionMethod::trotter, 4},
                                             {qsim::EvolutionMethod::qdrift, 1},
                                             {qsim::EvolutionMethod::qdrift, 2},
                                             {qsim::EvolutionMethod::qdrift, 5},
                                             {qsim::EvolutionMethod::qdrift, 10}};
  std::vector<std::int64_t> shots = {50, 200, 1000};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  kernel::KernelParams params;
  qsim::QdriftMode qdrift_mode = qsim::QdriftMode::per_shot;
  int zero_bin_half_width = 0;

  void validate() const;
};

struct RmseRow {
  std::string method;
  int repetitions = 0;
  std::int64_t shots = 0;
  double rmse = 0.0;
  std::uint64_t seed = 0;
  /// Smallest eigenvalue of the LGZ-backed Gram.
  double min_eigenvalue = 0.0;
};

struct RmseResult {
  std::vector<RmseRow> rows;
  /// Smallest eigenvalue of the exact classical Gram.
  double exact_min_eigenvalue = 0.0;
  /// RMSE of the noise-free LGZ Gram, one per entry of `simulations`.
  std::vector<double> expected_rmse;
};

/// The exact Gram is computed once on a dataset fixed by dataset_seed.
/// Rows are ordered by (simulation, seed, shots); sample i of a row draws
/// from derive_seed(seed, {i}).
RmseResult experiment_rmse(const RmseConfig& cfg,
                           const std::function<void(const std::string&)>& progress = {});

}  // namespace topoqk::shapes
