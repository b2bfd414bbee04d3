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

#include "topoqk/qsim/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "topoqk/errors.hpp"

namespace topoqk::qsim {

namespace {

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// In-place Walsh-Hadamard transform: out[z] = sum_a (-1)^{|z&a|} in[a].
void walsh_hadamard(std::vector<Complex>& v) {
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const Complex a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
}

// `diag_by_x[x][a]` holds h[a][a ^ x].
PauliSum decompose_diagonals(unsigned n, std::map<std::uint64_t, std::vector<Complex>> diag_by_x,
                             double prune_tol) {
  if (prune_tol < 0 || !std::isfinite(prune_tol)) throw InputError("prune_tol must be >= 0");
  PauliSum out;
  out.num_qubits = n;
  const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
  for (auto& [x, g] : diag_by_x) {
    walsh_hadamard(g);
    for (std::uint64_t z = 0; z < g.size(); ++z) {
      const Complex tr = kIPow[std::popcount(x & z) & 3] * g[z];
      const double c = tr.real() * scale;
      if (std::abs(c) > prune_tol && c != 0.0) out.terms.push_back({x, z, c});
    }
  }
  std::sort(out.terms.begin(), out.terms.end(), [n](const PauliTerm& a, const PauliTerm& b) {
    return a.label(n) < b.label(n);
  });
  return out;
}

}  // namespace

std::string PauliTerm::label(unsigned num_qubits) const {
  std::string s(num_qubits, 'I');
  for (unsigned q = 0; q < num_qubits; ++q) {
    const bool x = (x_mask >> q) & 1U, z = (z_mask >> q) & 1U;
    s[q] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

PauliTerm PauliTerm::from_label(const std::string& label, double coefficient) {
  if (label.size() > 63) throw InputError("Pauli label too long");
  PauliTerm t;
  t.coefficient = coefficient;
  for (std::size_t q = 0; q < label.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (label[q]) {
      case 'I': break;
      case 'X': t.x_mask |= bit; break;
      case 'Y': t.x_mask |= bit; t.z_mask |= bit; break;
      case 'Z': t.z_mask |= bit; break;
      default: throw InputError("invalid Pauli label '" + label + "'");
    }
  }
  return t;
}

double PauliSum::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms) s += std::abs(t.coefficient);
  return s;
}

Complex pauli_phase(std::uint64_t x_mask, std::uint64_t z_mask, std::uint64_t b) {
  const Complex p = kIPow[std::popcount(x_mask & z_mask) & 3];
  return (std::popcount(z_mask & b) & 1) ? -p : p;
}

Eigen::MatrixXcd PauliSum::to_matrix() const {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : terms)
    for (std::uint64_t b = 0; b < dim; ++b)
      m(b ^ t.x_mask, b) += t.coefficient * pauli_phase(t.x_mask, t.z_mask, b);
  return m;
}

Eigen::SparseMatrix<Complex> PauliSum::to_sparse() const {
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<Eigen::Triplet<Complex>> trip;
  trip.reserve(terms.size() * dim);
  for (const auto& t : terms)
    for (std::uint64_t b = 0; b < dim; ++b)
      trip.emplace_back(static_cast<int>(b ^ t.x_mask), static_cast<int>(b),
                        t.coefficient * pauli_phase(t.x_mask, t.z_mask, b));
  Eigen::SparseMatrix<Complex> m(dim, dim);
  m.setFromTriplets(trip.begin(), trip.end());
  m.prune(Complex(0.0, 0.0));
  return m;
}

PauliSum pauli_decompose(const HermitianOperator& h, double prune_tol) {
  const auto& m = h.matrix();
  const std::size_t dim = h.dim();
  std::map<std::uint64_t, std::vector<Complex>> by_x;
  for (std::uint64_t x = 0; x < dim; ++x) {
    std::vector<Complex> g(dim);
    bool any = false;
    for (std::uint64_t a = 0; a < dim; ++a) {
      g[a] = m(a, a ^ x);
      any = any || g[a] != Complex(0.0, 0.0);
    }
    if (any) by_x.emplace(x, std::move(g));
  }
  return decompose_diagonals(h.num_qubits(), std::move(by_x), prune_tol);
}

PauliSum pauli_decompose(const Eigen::SparseMatrix<double>& h, double prune_tol) {
  if (h.rows() != h.cols()) throw InputError("operator must be square");
  const unsigned n = qubits_for_dim(static_cast<std::size_t>(h.rows()));
  const Eigen::SparseMatrix<double> ht = h.transpose();
  if ((h - ht).norm() > 1e-10) throw InputError("operator is not symmetric");
  const std::size_t dim = std::size_t{1} << n;
  std::map<std::uint64_t, std::vector<Complex>> by_x;
  for (int col = 0; col < h.outerSize(); ++col)
    for (Eigen::SparseMatrix<double>::InnerIterator it(h, col); it; ++it) {
      const auto a = static_cast<std::uint64_t>(it.row());
      const auto x = a ^ static_cast<std::uint64_t>(col);
      auto [pos, inserted] = by_x.try_emplace(x);
      if (inserted) pos->second.assign(dim, Complex(0.0, 0.0));
      pos->second[a] += it.value();
    }
  return decompose_diagonals(n, std::move(by_x), prune_tol);
}

void apply_pauli_rotation(std::span<Complex> amps, std::uint64_t x_mask, std::uint64_t z_mask,
                          double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const Complex mis(0.0, -s);
  if (x_mask == 0) {
    const Complex plus(c, -s), minus(c, s);
    for (std::uint64_t a = 0; a < amps.size(); ++a)
      amps[a] *= (std::popcount(z_mask & a) & 1) ? minus : plus;
    return;
  }
  const Complex base = kIPow[std::popcount(x_mask & z_mask) & 3];
  for (std::uint64_t a = 0; a < amps.size(); ++a) {
    const std::uint64_t b = a ^ x_mask;
    if (b < a) continue;
    const Complex pa = (std::popcount(z_mask & a) & 1) ? -base : base;
    const Complex pb = (std::popcount(z_mask & b) & 1) ? -base : base;
    const Complex va = amps[a], vb = amps[b];
    amps[a] = c * va + mis * pb * vb;
    amps[b] = c * vb + mis * pa * va;
  }
}

}  // namespace topoqk::qsim
