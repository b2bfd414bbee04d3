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
#include <span>

#include <Eigen/Core>

#include "topoqk/kernel/curves.hpp"

namespace topoqk::kernel {

struct KernelParams {
  double gamma = 1.0;
  /// Minkowski exponent.
  double p = 2.0;

  /// Throws InputError unless gamma > 0 and p >= 1.
  void validate() const;
};

/// Threshold-weighted Minkowski distance between curves on the same grid:
/// (sum_k sum_{j<q} (eps_{j+1} - eps_j) |a_kj - b_kj|^p)^(1/p).
double curve_distance(const BettiCurveMatrix& a, const BettiCurveMatrix& b, const KernelParams& params);

/// exp(-gamma * curve_distance).
double topo_kernel(const BettiCurveMatrix& a, const BettiCurveMatrix& b, const KernelParams& params);

enum class ConventionalKind { rbf, laplacian, polynomial };

/// rbf: exp(-h |x-y|_2^2); laplacian: exp(-h |x-y|_1); polynomial: (x.y + 1)^h.
double conventional_kernel(std::span<const double> x, std::span<const double> y, ConventionalKind kind,
                           double hyper);

/// k(a, a) + k(b, b) - k(a, b).
double kernel_induced_distance(double k_aa, double k_bb, double k_ab);

using GramMatrix = Eigen::MatrixXd;

/// Evaluates the upper triangle and mirrors it.
template <class Item, class Kernel>
GramMatrix gram_matrix(std::span<const Item> items, Kernel&& kernel) {
  const auto m = static_cast<Eigen::Index>(items.size());
  GramMatrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = i; j < m; ++j)
      g(i, j) = g(j, i) = kernel(items[static_cast<std::size_t>(i)], items[static_cast<std::size_t>(j)]);
  return g;
}

/// sqrt(sum_ij (a_ij - b_ij)^2 / m^2).
double rmse(const GramMatrix& a, const GramMatrix& b);

struct PsdReport {
  double min_eigenvalue = 0.0;
  bool is_psd = false;
};

PsdReport psd_check(const GramMatrix& k, double tol = 1e-8);

/// |perturbed - exact|_F / |exact|_F for entrywise factors; 0 for a zero matrix.
double relative_perturbation(const BettiCurveMatrix& exact, const Eigen::MatrixXd& factors);

/// Scales each entry by an independent factor in [1 - delta, 1 + delta] and
/// reports whether the relative Frobenius error stays within delta.
bool perturbation_bound_check(const BettiCurveMatrix& exact, double delta, std::uint64_t seed);

}  // namespace topoqk::kernel
