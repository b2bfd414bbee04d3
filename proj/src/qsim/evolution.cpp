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

#include "topoqk/qsim/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topoqk/errors.hpp"

namespace topoqk::qsim {

void validate(const EvolutionConfig& cfg) {
  if (cfg.repetitions < 1) throw InputError("repetitions must be >= 1");
  if (!(cfg.prune_tol >= 0.0)) throw InputError("prune_tol must be >= 0");
}

std::vector<PauliTerm> trotter_order(const PauliSum& h) {
  std::vector<PauliTerm> terms = h.terms;
  const unsigned n = h.num_qubits;
  std::stable_sort(terms.begin(), terms.end(), [n](const PauliTerm& a, const PauliTerm& b) {
    const double ca = std::abs(a.coefficient), cb = std::abs(b.coefficient);
    if (ca != cb) return ca > cb;
    return a.label(n) < b.label(n);
  });
  return terms;
}

std::vector<PauliRotation> trotter_sequence(const PauliSum& h, double time, long slices) {
  if (slices < 1) throw InputError("slice count must be >= 1");
  const auto terms = trotter_order(h);
  std::vector<PauliRotation> seq;
  seq.reserve(terms.size() * static_cast<std::size_t>(slices));
  for (long r = 0; r < slices; ++r)
    for (const auto& t : terms)
      seq.push_back({t.x_mask, t.z_mask, time * t.coefficient / static_cast<double>(slices)});
  return seq;
}

std::vector<PauliRotation> qdrift_sequence(const PauliSum& h, double time, long samples, Rng& rng) {
  if (samples < 1) throw InputError("sample count must be >= 1");
  const double lambda = h.one_norm();
  std::vector<PauliRotation> seq;
  if (h.terms.empty() || lambda == 0.0) return seq;
  std::vector<double> cdf(h.terms.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < h.terms.size(); ++j) cdf[j] = acc += std::abs(h.terms[j].coefficient) / lambda;
  const double step = lambda * time / static_cast<double>(samples);
  seq.reserve(static_cast<std::size_t>(samples));
  for (long i = 0; i < samples; ++i) {
    const double u = rng.uniform();
    auto j = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    j = std::min(j, h.terms.size() - 1);
    const auto& t = h.terms[j];
    seq.push_back({t.x_mask, t.z_mask, t.coefficient > 0 ? step : -step});
  }
  return seq;
}

void apply_sequence(std::span<Complex> amps, std::span<const PauliRotation> seq) {
  for (const auto& r : seq) apply_pauli_rotation(amps, r.x_mask, r.z_mask, r.angle);
}

Eigen::VectorXcd expm_multiply(const Eigen::SparseMatrix<Complex>& h, double time,
                               const Eigen::VectorXcd& v) {
  double norm = 0.0;
  for (int c = 0; c < h.outerSize(); ++c) {
    double col = 0.0;
    for (Eigen::SparseMatrix<Complex>::InnerIterator it(h, c); it; ++it) col += std::abs(it.value());
    norm = std::max(norm, col);
  }
  const long steps = std::max(1L, static_cast<long>(std::ceil(2.0 * std::abs(time) * norm)));
  const Complex dt(0.0, -time / static_cast<double>(steps));
  Eigen::VectorXcd out = v;
  for (long s = 0; s < steps; ++s) {
    Eigen::VectorXcd term = out;
    for (int k = 1; k < 60; ++k) {
      term = (dt / static_cast<double>(k)) * (h * term);
      out += term;
      if (term.norm() <= 1e-17 * out.norm()) break;
    }
  }
  return out;
}

Statevector evolve(const Statevector& state, const PauliSum& h, double time,
                   const EvolutionConfig& cfg) {
  validate(cfg);
  if (h.num_qubits != state.num_qubits())
    throw InputError("operator acts on " + std::to_string(h.num_qubits) + " qubits, state has " +
                     std::to_string(state.num_qubits()));
  Statevector out = state;
  auto& amps = out.amplitudes();
  std::span<Complex> view(amps.data(), static_cast<std::size_t>(amps.size()));
  switch (cfg.method) {
    case EvolutionMethod::exact: {
      if (h.num_qubits > kDenseQubitLimit)
        amps = expm_multiply(h.to_sparse(), time, state.amplitudes());
      else
        amps = exact_unitary(h.to_matrix(), time) * state.amplitudes();
      break;
    }
    case EvolutionMethod::trotter:
      apply_sequence(view, trotter_sequence(h, time, cfg.repetitions));
      break;
    case EvolutionMethod::qdrift: {
      Rng rng(cfg.seed);
      apply_sequence(view, qdrift_sequence(h, time, cfg.repetitions, rng));
      break;
    }
  }
  return out;
}

}  // namespace topoqk::qsim
