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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "topoqk/qsim/state.hpp"

namespace topoqk::qsim {

/// Real-weighted Pauli string c * P. Per qubit q the pair of mask bits
/// (x, z) selects I (0,0), X (1,0), Y (1,1) or Z (0,1), so
/// P = i^{|x&z|} X^x Z^z and P|b> = i^{|x&z|} (-1)^{|z&b|} |b ^ x>.
struct PauliTerm {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  double coefficient = 0.0;

  /// Character q is the Pauli acting on qubit q.
  std::string label(unsigned num_qubits) const;
  static PauliTerm from_label(const std::string& label, double coefficient);

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;
};

/// Sum of Pauli terms on a fixed register.
struct PauliSum {
  unsigned num_qubits = 0;
  std::vector<PauliTerm> terms;

  /// lambda = sum |c_j|.
  double one_norm() const;
  Eigen::MatrixXcd to_matrix() const;
  Eigen::SparseMatrix<Complex> to_sparse() const;
};

/// c_P = tr(P h) / 2^n for all 4^n strings, dropping |c_P| <= prune_tol.
/// Uses one Walsh-Hadamard transform per occurring X pattern.
PauliSum pauli_decompose(const HermitianOperator& h, double prune_tol = 1e-12);
/// Same for a real symmetric sparse matrix; throws InputError if not symmetric.
PauliSum pauli_decompose(const Eigen::SparseMatrix<double>& h, double prune_tol = 1e-12);

/// Sign/phase of P|b>, i.e. the value p with P|b> = p |b ^ x>.
Complex pauli_phase(std::uint64_t x_mask, std::uint64_t z_mask, std::uint64_t b);

/// amps <- exp(-i * angle * P) amps, in place.
void apply_pauli_rotation(std::span<Complex> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                          double angle);

}  // namespace topoqk::qsim
