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

#include "topoqk/qsim/state.hpp"

#include <bit>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "topoqk/errors.hpp"

namespace topoqk::qsim {

unsigned qubits_for_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim))
    throw InputError("dimension " + std::to_string(dim) + " is not a power of two");
  return static_cast<unsigned>(std::countr_zero(dim));
}

Statevector::Statevector(unsigned num_qubits)
    : n_(num_qubits), amps_(Eigen::VectorXcd::Zero(Eigen::Index{1} << num_qubits)) {
  amps_(0) = 1.0;
}

Statevector::Statevector(Eigen::VectorXcd amplitudes)
    : n_(qubits_for_dim(static_cast<std::size_t>(amplitudes.size()))), amps_(std::move(amplitudes)) {
  if (std::abs(amps_.norm() - 1.0) > 1e-10) throw InputError("statevector must have unit norm");
}

Statevector Statevector::basis(unsigned num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dim()) throw InputError("basis index out of range");
  s.amps_(0) = 0.0;
  s.amps_(static_cast<Eigen::Index>(index)) = 1.0;
  return s;
}

HermitianOperator::HermitianOperator(Eigen::MatrixXcd m) : n_(0), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw InputError("operator must be square");
  n_ = qubits_for_dim(static_cast<std::size_t>(m_.rows()));
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw InputError("operator is not Hermitian");
}

Eigen::MatrixXcd exact_unitary(const Eigen::MatrixXcd& h, double time) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  const Eigen::VectorXcd phases =
      (es.eigenvalues().cast<Complex>() * Complex(0.0, -time)).array().exp().matrix();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace topoqk::qsim
