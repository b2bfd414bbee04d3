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

#include "topoqk/qsim/qpe.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "topoqk/errors.hpp"

namespace topoqk::qsim {

namespace {

void hadamard(std::span<Complex> amps, unsigned q) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  const double r = std::numbers::sqrt2 / 2;
  for (std::uint64_t a = 0; a < amps.size(); ++a) {
    if (a & bit) continue;
    const Complex u = amps[a], v = amps[a | bit];
    amps[a] = r * (u + v);
    amps[a | bit] = r * (u - v);
  }
}

void controlled_phase(std::span<Complex> amps, unsigned c, unsigned q, double angle) {
  const std::uint64_t mask = (std::uint64_t{1} << c) | (std::uint64_t{1} << q);
  const Complex ph = std::polar(1.0, angle);
  for (std::uint64_t a = 0; a < amps.size(); ++a)
    if ((a & mask) == mask) amps[a] *= ph;
}

void swap_qubits(std::span<Complex> amps, unsigned p, unsigned q) {
  if (p == q) return;
  const std::uint64_t bp = std::uint64_t{1} << p, bq = std::uint64_t{1} << q;
  for (std::uint64_t a = 0; a < amps.size(); ++a)
    if ((a & bp) && !(a & bq)) std::swap(amps[a], amps[(a ^ bp) | bq]);
}

void check_options(int ancillas, std::int64_t shots) {
  if (ancillas < 1 || ancillas > 20) throw InputError("ancilla count must be in [1, 20]");
  if (shots < 1) throw InputError("shots must be >= 1");
}

PhaseHistogram run(const Statevector& initial, const QpeOptions& opts,
                   const std::function<RungApplier(Rng*)>& make_applier) {
  check_options(opts.ancillas, opts.shots);
  validate(opts.evolution);
  Rng sampler(opts.seed);
  const bool per_shot = opts.evolution.method == EvolutionMethod::qdrift &&
                        opts.evolution.qdrift_mode == QdriftMode::per_shot;
  if (!per_shot) {
    Rng product(opts.evolution.seed);
    const auto probs = phase_estimation_distribution(initial, opts.ancillas, make_applier(&product));
    return sample_histogram(probs, opts.ancillas, opts.shots, sampler);
  }
  PhaseHistogram hist;
  hist.t = opts.ancillas;
  hist.shots = opts.shots;
  for (std::int64_t s = 0; s < opts.shots; ++s) {
    Rng product(derive_seed(opts.evolution.seed, {static_cast<std::uint64_t>(s)}));
    const auto probs = phase_estimation_distribution(initial, opts.ancillas, make_applier(&product));
    const auto one = sample_histogram(probs, opts.ancillas, 1, sampler);
    ++hist.counts[one.counts.begin()->first];
  }
  return hist;
}

RungApplier dense_applier(const Eigen::MatrixXcd& h, double time, int ancillas) {
  std::vector<Eigen::MatrixXcd> powers;
  for (int s = 0; s < ancillas; ++s) powers.push_back(exact_unitary(h, time * std::ldexp(1.0, s)));
  return [powers = std::move(powers)](std::span<Complex> block, int rung) {
    Eigen::Map<Eigen::VectorXcd> v(block.data(), static_cast<Eigen::Index>(block.size()));
    v = (powers[static_cast<std::size_t>(rung)] * v).eval();
  };
}

}  // namespace

std::string PhaseHistogram::label(std::uint64_t outcome) const {
  std::string s(static_cast<std::size_t>(t), '0');
  for (int i = 0; i < t; ++i)
    if ((outcome >> i) & 1U) s[static_cast<std::size_t>(t - 1 - i)] = '1';
  return s;
}

double PhaseHistogram::phase(std::uint64_t outcome) const {
  return std::ldexp(static_cast<double>(outcome), -t);
}

void inverse_qft(std::span<Complex> amps, unsigned first, unsigned count) {
  for (unsigned j = 0; j < count / 2; ++j) swap_qubits(amps, first + j, first + count - 1 - j);
  for (unsigned j = 0; j < count; ++j) {
    for (unsigned m = 0; m < j; ++m)
      controlled_phase(amps, first + m, first + j, -std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - m)));
    hadamard(amps, first + j);
  }
}

std::vector<double> phase_estimation_distribution(const Statevector& initial, int ancillas,
                                                  const RungApplier& apply_rung) {
  check_options(ancillas, 1);
  const unsigned n = initial.num_qubits();
  const std::size_t dim = initial.dim();
  const std::size_t outcomes = std::size_t{1} << ancillas;
  std::vector<Complex> amps(dim * outcomes, Complex(0.0, 0.0));
  std::copy(initial.amplitudes().begin(), initial.amplitudes().end(), amps.begin());
  std::span<Complex> reg(amps);
  for (int s = 0; s < ancillas; ++s) hadamard(reg, n + static_cast<unsigned>(s));
  for (int s = 0; s < ancillas; ++s)
    for (std::size_t a = 0; a < outcomes; ++a)
      if ((a >> s) & 1U) apply_rung(reg.subspan(a * dim, dim), s);
  inverse_qft(reg, n, static_cast<unsigned>(ancillas));
  std::vector<double> probs(outcomes, 0.0);
  for (std::size_t y = 0; y < outcomes; ++y)
    for (std::size_t b = 0; b < dim; ++b) probs[y] += std::norm(amps[y * dim + b]);
  return probs;
}

PhaseHistogram sample_histogram(std::span<const double> probs, int ancillas, std::int64_t shots,
                                Rng& rng) {
  check_options(ancillas, shots);
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) cdf[i] = acc += std::max(probs[i], 0.0);
  if (!(acc > 0.0)) throw StructuralError("outcome distribution has no mass");
  PhaseHistogram hist;
  hist.t = ancillas;
  hist.shots = shots;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto y = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    y = std::min(y, probs.size() - 1);
    ++hist.counts[y];
  }
  return hist;
}

PhaseHistogram qpe(const Statevector& initial, const PauliSum& h, const QpeOptions& opts) {
  if (h.num_qubits != initial.num_qubits()) throw InputError("operator and state qubit counts differ");
  const auto& cfg = opts.evolution;
  const double time = opts.time;
  const int t = opts.ancillas;
  switch (cfg.method) {
    case EvolutionMethod::exact: {
      if (h.num_qubits > kDenseQubitLimit) throw ResourceError("exact evolution limited to 10 qubits");
      return run(initial, opts, [&](Rng*) { return dense_applier(h.to_matrix(), time, t); });
    }
    case EvolutionMethod::trotter: {
      return run(initial, opts, [&](Rng*) -> RungApplier {
        std::vector<std::vector<PauliRotation>> seqs;
        for (int s = 0; s < t; ++s)
          seqs.push_back(trotter_sequence(h, time * std::ldexp(1.0, s), static_cast<long>(cfg.repetitions) << s));
        return [seqs = std::move(seqs)](std::span<Complex> block, int rung) {
          apply_sequence(block, seqs[static_cast<std::size_t>(rung)]);
        };
      });
    }
    case EvolutionMethod::qdrift: {
      return run(initial, opts, [&](Rng* rng) -> RungApplier {
        std::vector<std::vector<PauliRotation>> seqs;
        for (int s = 0; s < t; ++s)
          seqs.push_back(qdrift_sequence(h, time * std::ldexp(1.0, s), static_cast<long>(cfg.repetitions) << s, *rng));
        return [seqs = std::move(seqs)](std::span<Complex> block, int rung) {
          apply_sequence(block, seqs[static_cast<std::size_t>(rung)]);
        };
      });
    }
  }
  throw StructuralError("unknown evolution method");
}

PhaseHistogram qpe(const Statevector& initial, const HermitianOperator& h, const QpeOptions& opts) {
  if (h.num_qubits() != initial.num_qubits()) throw InputError("operator and state qubit counts differ");
  if (opts.evolution.method == EvolutionMethod::exact)
    return run(initial, opts, [&](Rng*) { return dense_applier(h.matrix(), opts.time, opts.ancillas); });
  return qpe(initial, pauli_decompose(h, opts.evolution.prune_tol), opts);
}

double zero_phase_fraction(const PhaseHistogram& h) {
  if (h.shots <= 0) throw InputError("histogram has no shots");
  const auto it = h.counts.find(0);
  return it == h.counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(h.shots);
}

}  // namespace topoqk::qsim
