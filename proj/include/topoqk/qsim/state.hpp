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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Core>

namespace topoqk::qsim {

using Complex = std::complex<double>;

/// Pure state of `num_qubits` qubits; basis index bit q <-> qubit q.
class Statevector {
 public:
  /// |0...0>.
  explicit Statevector(unsigned num_qubits);
  /// Validates length 2^n and unit norm within 1e-10.
  explicit Statevector(Eigen::VectorXcd amplitudes);

  static Statevector basis(unsigned num_qubits, std::uint64_t index);

  unsigned num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amps_; }
  Eigen::VectorXcd& amplitudes() { return amps_; }
  double norm() const { return amps_.norm(); }

 private:
  unsigned n_;
  Eigen::VectorXcd amps_;
};

/// Dense Hermitian matrix on 2^n dimensions.
class HermitianOperator {
 public:
  /// Validates a square power-of-two shape and Hermiticity within 1e-10.
  explicit HermitianOperator(Eigen::MatrixXcd m);

  unsigned num_qubits() const { return n_; }
  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Eigen::MatrixXcd& matrix() const { return m_; }

 private:
  unsigned n_;
  Eigen::MatrixXcd m_;
};

/// Number of qubits n with 2^n == dim, or throws InputError.
unsigned qubits_for_dim(std::size_t dim);

/// exp(-i * time * h) by eigendecomposition.
Eigen::MatrixXcd exact_unitary(const Eigen::MatrixXcd& h, double time);

}  // namespace topoqk::qsim
