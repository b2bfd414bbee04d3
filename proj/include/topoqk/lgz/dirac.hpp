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
#include <optional>

#include <Eigen/SparseCore>

#include "topoqk/qsim/pauli.hpp"
#include "topoqk/tda/complex.hpp"

namespace topoqk::lgz {

/// Largest complex (in vertices, hence qubits) the operator is built for.
inline constexpr std::size_t kMaxDiracQubits = 14;

/// Boundary maps of a complex embedded on n-qubit bitstrings: the entry
/// between a p-simplex x and its facet omitting the j-th smallest vertex
/// is (-1)^j, mirrored to make the matrix symmetric. Its square preserves
/// Hamming weight and restricts to the Hodge Laplacians.
class DiracOperator {
 public:
  /// Throws ResourceError above kMaxDiracQubits vertices.
  explicit DiracOperator(const tda::SimplicialComplex& s);

  unsigned num_qubits() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }
  const Eigen::SparseMatrix<double>& matrix() const { return m_; }
  bool is_zero() const { return m_.nonZeros() == 0; }

 private:
  unsigned n_;
  Eigen::SparseMatrix<double> m_;
};

/// 1.01 times the largest absolute row sum, or 1 for the zero operator.
double rescale_factor(const DiracOperator& b);

/// Pauli terms of B / rescale, so that U = exp(-i * terms) at unit time.
qsim::PauliSum scaled_terms(const DiracOperator& b, double rescale, double prune_tol = 1e-12);

struct ConditionDiagnostics {
  double lambda_max = 0.0;
  /// Absent when every eigenvalue is zero.
  std::optional<double> lambda_min_nonzero;
  std::optional<double> kappa;
};

/// Extreme eigenvalue magnitudes by dense diagonalization (n <= 10).
ConditionDiagnostics condition_diagnostics(const DiracOperator& b, double zero_tol = 1e-8);

}  // namespace topoqk::lgz
