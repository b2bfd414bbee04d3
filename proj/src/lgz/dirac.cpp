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

#include "topoqk/lgz/dirac.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "topoqk/errors.hpp"
#include "topoqk/qsim/evolution.hpp"

namespace topoqk::lgz {

DiracOperator::DiracOperator(const tda::SimplicialComplex& s)
    : n_(static_cast<unsigned>(s.num_vertices())) {
  if (s.num_vertices() > kMaxDiracQubits)
    throw ResourceError("Dirac operator supports at most " + std::to_string(kMaxDiracQubits) +
                        " vertices, complex has " + std::to_string(s.num_vertices()));
  std::vector<Eigen::Triplet<double>> trip;
  for (int p = 1; p <= s.max_dim(); ++p)
    for (const auto& simplex : s.simplices(static_cast<std::size_t>(p))) {
      const auto x = static_cast<int>(tda::to_mask(simplex));
      for (std::size_t j = 0; j < simplex.size(); ++j) {
        const int y = x & ~(1 << simplex[j]);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        trip.emplace_back(x, y, sign);
        trip.emplace_back(y, x, sign);
      }
    }
  m_.resize(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
  m_.setFromTriplets(trip.begin(), trip.end());
}

double rescale_factor(const DiracOperator& b) {
  if (b.is_zero()) return 1.0;
  Eigen::VectorXd rows = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(b.dim()));
  const auto& m = b.matrix();
  for (int c = 0; c < m.outerSize(); ++c)
    for (Eigen::SparseMatrix<double>::InnerIterator it(m, c); it; ++it) rows(it.row()) += std::abs(it.value());
  return 1.01 * rows.maxCoeff();
}

qsim::PauliSum scaled_terms(const DiracOperator& b, double rescale, double prune_tol) {
  if (!(rescale > 0.0)) throw InputError("rescale factor must be positive");
  auto terms = qsim::pauli_decompose(b.matrix(), prune_tol);
  for (auto& t : terms.terms) t.coefficient /= rescale;
  return terms;
}

ConditionDiagnostics condition_diagnostics(const DiracOperator& b, double zero_tol) {
  if (b.num_qubits() > qsim::kDenseQubitLimit)
    throw ResourceError("condition diagnostics limited to 10 qubits");
  const Eigen::MatrixXd dense(b.matrix());
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense, Eigen::EigenvaluesOnly)
                                 .eigenvalues()
                                 .cwiseAbs();
  ConditionDiagnostics d;
  d.lambda_max = ev.maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i)
    if (ev(i) > zero_tol) d.lambda_min_nonzero = std::min(d.lambda_min_nonzero.value_or(ev(i)), ev(i));
  if (d.lambda_min_nonzero) d.kappa = d.lambda_max / *d.lambda_min_nonzero;
  return d;
}

}  // namespace topoqk::lgz
