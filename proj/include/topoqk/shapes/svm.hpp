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
#include <span>
#include <vector>

#include <Eigen/Core>

namespace topoqk::shapes {

struct SvmOptions {
  double c = 1.0;
  double tol = 1e-6;
  long max_iter = 100000;
};

/// Soft-margin classifier f(x) = sum_i alpha_i y_i k(x_i, x) + bias.
struct SvmModel {
  std::vector<double> alphas;
  std::vector<int> labels;
  double bias = 0.0;
  double c = 1.0;
  /// Indices with alpha > 0.
  std::vector<std::size_t> support;
  bool converged = false;
  long iterations = 0;

  /// Throws InputError when the row length differs from the training size.
  double decision(std::span<const double> kernel_row) const;
};

/// SMO on the dual max sum(a) - 1/2 a^T Q a, Q_ij = y_i y_j K_ij, subject to
/// 0 <= a_i <= C and y^T a = 0, with second-order working-set selection.
/// Stops when the maximal KKT violation is below tol; otherwise returns the
/// last iterate with converged = false.
SvmModel svm_train(const Eigen::MatrixXd& gram, std::span<const int> labels, const SvmOptions& opts = {});

/// Sign of the decision value, with 0 mapped to +1.
int svm_predict(const SvmModel& model, std::span<const double> kernel_row);

/// sum(a) - 1/2 sum_ij a_i a_j y_i y_j K_ij.
double dual_objective(const Eigen::MatrixXd& gram, std::span<const int> labels, std::span<const double> alphas);

}  // namespace topoqk::shapes
