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

#include "topoqk/kernel/kernels.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "topoqk/errors.hpp"
#include "topoqk/random.hpp"

namespace topoqk::kernel {

void KernelParams::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw InputError("gamma must be positive");
  if (!(p >= 1.0) || !std::isfinite(p)) throw InputError("p must be >= 1");
}

double curve_distance(const BettiCurveMatrix& a, const BettiCurveMatrix& b, const KernelParams& params) {
  params.validate();
  a.validate();
  b.validate();
  if (a.k_max != b.k_max) throw InputError("curves have different k_max");
  if (!(a.thresholds == b.thresholds)) throw InputError("curves are defined on different threshold grids");
  double sum = 0.0;
  const auto q = a.thresholds.size();
  for (Eigen::Index k = 0; k < a.values.rows(); ++k)
    for (std::size_t j = 0; j + 1 < q; ++j) {
      const auto c = static_cast<Eigen::Index>(j);
      const double diff = std::abs(a.values(k, c) - b.values(k, c));
      if (diff != 0.0) sum += (a.thresholds[j + 1] - a.thresholds[j]) * std::pow(diff, params.p);
    }
  return std::pow(sum, 1.0 / params.p);
}

double topo_kernel(const BettiCurveMatrix& a, const BettiCurveMatrix& b, const KernelParams& params) {
  return std::exp(-params.gamma * curve_distance(a, b, params));
}

double conventional_kernel(std::span<const double> x, std::span<const double> y, ConventionalKind kind,
                           double hyper) {
  if (x.size() != y.size()) throw InputError("kernel inputs have different lengths");
  switch (kind) {
    case ConventionalKind::rbf: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
      return std::exp(-hyper * s);
    }
    case ConventionalKind::laplacian: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::abs(x[i] - y[i]);
      return std::exp(-hyper * s);
    }
    case ConventionalKind::polynomial: {
      double s = 1.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
      return std::pow(s, hyper);
    }
  }
  throw InputError("unknown kernel kind");
}

double kernel_induced_distance(double k_aa, double k_bb, double k_ab) { return k_aa + k_bb - k_ab; }

double rmse(const GramMatrix& a, const GramMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw InputError("Gram matrices must be square and of equal shape");
  if (a.size() == 0) return 0.0;
  return std::sqrt((a - b).squaredNorm() / static_cast<double>(a.size()));
}

PsdReport psd_check(const GramMatrix& k, double tol) {
  if (k.rows() != k.cols() || k.rows() == 0) throw InputError("Gram matrix must be square and nonempty");
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(k, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  return {lo, lo >= -tol};
}

double relative_perturbation(const BettiCurveMatrix& exact, const Eigen::MatrixXd& factors) {
  exact.validate();
  if (factors.rows() != exact.values.rows() || factors.cols() != exact.values.cols())
    throw InputError("factor matrix shape mismatch");
  const double norm = exact.values.norm();
  if (norm == 0.0) return 0.0;
  const Eigen::MatrixXd perturbed = exact.values.cwiseProduct(factors);
  return (perturbed - exact.values).norm() / norm;
}

bool perturbation_bound_check(const BettiCurveMatrix& exact, double delta, std::uint64_t seed) {
  if (!(delta >= 0.0)) throw InputError("delta must be >= 0");
  Rng rng(seed);
  Eigen::MatrixXd factors(exact.values.rows(), exact.values.cols());
  for (Eigen::Index i = 0; i < factors.size(); ++i) factors(i) = rng.uniform(1.0 - delta, 1.0 + delta);
  return relative_perturbation(exact, factors) <= delta;
}

}  // namespace topoqk::kernel
