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

#include "topoqk/lgz/zero_phase.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <numbers>
#include <span>

#include <Eigen/Dense>

#include "topoqk/errors.hpp"

namespace topoqk::lgz {

using qsim::Complex;

namespace {

Complex rung_weight(int rung, std::uint64_t outcome, int ancillas) {
  const double frac = std::ldexp(static_cast<double>((outcome << rung) & ((std::uint64_t{1} << ancillas) - 1)), -ancillas);
  return std::polar(1.0, -2.0 * std::numbers::pi * frac);
}

Eigen::MatrixXcd sequence_matrix(Eigen::Index dim, std::span<const qsim::PauliRotation> seq) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c)
    qsim::apply_sequence({m.col(c).data(), static_cast<std::size_t>(dim)}, seq);
  return m;
}

void walsh_hadamard(Eigen::VectorXd& v) {
  const auto size = static_cast<std::size_t>(v.size());
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v(static_cast<Eigen::Index>(j)), b = v(static_cast<Eigen::Index>(j + h));
        v(static_cast<Eigen::Index>(j)) = a + b;
        v(static_cast<Eigen::Index>(j + h)) = a - b;
      }
}

// Adjoint of the one-draw qDrift channel,
// O -> c^2 O + s^2 sum_j p_j P_j O P_j + i (c s / lambda) [H, O].
// Conjugation by a Pauli with masks (x, z) sends O[a][b] to
// (-1)^{|z & (a ^ b)|} O[a ^ x][b ^ x]; summing over z for a fixed x is a
// Walsh-Hadamard transform of the weights.
class DriftChannel {
 public:
  DriftChannel(const qsim::PauliSum& h, long samples) : dim_(Eigen::Index{1} << h.num_qubits) {
    const double lambda = h.one_norm();
    const double theta = lambda / static_cast<double>(samples);
    c_ = std::cos(theta);
    s_ = std::sin(theta);
    commutator_ = Complex(0.0, c_ * s_ / lambda);
    h_ = h.to_sparse();
    std::map<std::uint64_t, Eigen::VectorXd> by_x;
    for (const auto& t : h.terms) {
      auto [it, inserted] = by_x.try_emplace(t.x_mask);
      if (inserted) it->second = Eigen::VectorXd::Zero(dim_);
      it->second(static_cast<Eigen::Index>(t.z_mask)) += std::abs(t.coefficient) / lambda;
    }
    for (auto& [x, w] : by_x) {
      walsh_hadamard(w);
      flips_.emplace_back(x, std::move(w));
    }
    step_mean_ = c_ * Eigen::MatrixXcd::Identity(dim_, dim_) - Complex(0.0, s_ / lambda) * Eigen::MatrixXcd(h_);
  }

  const Eigen::MatrixXcd& step_mean() const { return step_mean_; }

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& o) const {
    Eigen::MatrixXcd r = c_ * c_ * o + commutator_ * (h_ * o - o * h_);
    const double s2 = s_ * s_;
    for (const auto& [x, w] : flips_)
      for (Eigen::Index b = 0; b < dim_; ++b) {
        const auto bx = static_cast<Eigen::Index>(static_cast<std::uint64_t>(b) ^ x);
        for (Eigen::Index a = 0; a < dim_; ++a) {
          const auto ax = static_cast<Eigen::Index>(static_cast<std::uint64_t>(a) ^ x);
          r(a, b) += s2 * w(static_cast<Eigen::Index>(static_cast<std::uint64_t>(a ^ b))) * o(ax, bx);
        }
      }
    return r;
  }

 private:
  Eigen::Index dim_;
  double c_ = 1.0, s_ = 0.0;
  Complex commutator_;
  Eigen::SparseMatrix<Complex> h_;
  std::vector<std::pair<std::uint64_t, Eigen::VectorXd>> flips_;
  Eigen::MatrixXcd step_mean_;
};

}  // namespace

ZeroPhaseModel::ZeroPhaseModel(const DiracOperator& b, int ancillas,
                               const qsim::EvolutionConfig& evolution, int zero_bin_half_width)
    : n_(b.num_qubits()),
      t_(ancillas),
      half_width_(zero_bin_half_width),
      evolution_(evolution),
      rescale_(rescale_factor(b)),
      dense_(b.num_qubits() <= qsim::kDenseQubitLimit),
      zero_operator_(b.is_zero()) {
  qsim::validate(evolution);
  if (ancillas < 1 || ancillas > 20) throw InputError("ancilla count must be in [1, 20]");
  if (zero_bin_half_width < 0 || std::ldexp(1.0, ancillas) <= 2.0 * zero_bin_half_width)
    throw InputError("zero-bin half-width must be in [0, 2^(t-1))");
  terms_ = scaled_terms(b, rescale_, evolution.prune_tol);
  zero_operator_ = zero_operator_ || terms_.terms.empty();
  if (zero_operator_) return;
  if (dense_)
    build_dense(b);
  else
    sparse_h_ = (b.matrix() / rescale_).cast<Complex>();
}

std::vector<std::uint64_t> ZeroPhaseModel::zero_bin() const {
  const std::uint64_t outcomes = std::uint64_t{1} << t_;
  std::vector<std::uint64_t> ys{0};
  for (int d = 1; d <= half_width_; ++d) {
    ys.push_back(static_cast<std::uint64_t>(d));
    ys.push_back(outcomes - static_cast<std::uint64_t>(d));
  }
  return ys;
}

bool ZeroPhaseModel::per_shot_products() const {
  return evolution_.method == qsim::EvolutionMethod::qdrift &&
         evolution_.qdrift_mode == qsim::QdriftMode::per_shot;
}

void ZeroPhaseModel::build_dense(const DiracOperator& b) {
  const auto dim = static_cast<Eigen::Index>(b.dim());
  const long reps = evolution_.repetitions;
  dense_probs_ = Eigen::VectorXd::Zero(dim);

  if (per_shot_products()) {
    const DriftChannel channel(terms_, reps);
    std::vector<Eigen::MatrixXcd> means{Eigen::MatrixXcd::Identity(dim, dim)};
    for (long i = 0; i < reps; ++i) means[0] = (means[0] * channel.step_mean()).eval();
    for (int s = 1; s < t_; ++s) means.push_back(means.back() * means.back());
    for (std::uint64_t y : zero_bin()) {
      Eigen::MatrixXcd o = Eigen::MatrixXcd::Identity(dim, dim) / std::ldexp(1.0, 2 * t_);
      for (int s = t_ - 1; s >= 0; --s) {
        const Complex w = rung_weight(s, y, t_);
        Eigen::MatrixXcd conj = o;
        for (long i = 0; i < (reps << s); ++i) conj = channel.apply(conj);
        const auto& m = means[static_cast<std::size_t>(s)];
        o = o + w * (o * m) + std::conj(w) * (m.adjoint() * o) + conj;
      }
      dense_probs_ += o.diagonal().real();
    }
    return;
  }

  std::vector<Eigen::MatrixXcd> rungs;
  switch (evolution_.method) {
    case qsim::EvolutionMethod::exact: {
      const Eigen::MatrixXd scaled = Eigen::MatrixXd(b.matrix()) / rescale_;
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(scaled);
      const Eigen::MatrixXcd v = es.eigenvectors().cast<Complex>();
      for (int s = 0; s < t_; ++s) {
        const Eigen::VectorXcd phases =
            (es.eigenvalues().cast<Complex>() * Complex(0.0, -std::ldexp(1.0, s))).array().exp().matrix();
        rungs.push_back(v * phases.asDiagonal() * v.adjoint());
      }
      break;
    }
    case qsim::EvolutionMethod::trotter: {
      rungs.push_back(sequence_matrix(dim, qsim::trotter_sequence(terms_, 1.0, reps)));
      for (int s = 1; s < t_; ++s) rungs.push_back(rungs.back() * rungs.back());
      break;
    }
    case qsim::EvolutionMethod::qdrift: {
      Rng product(evolution_.seed);
      for (int s = 0; s < t_; ++s)
        rungs.push_back(sequence_matrix(dim, qsim::qdrift_sequence(terms_, std::ldexp(1.0, s), reps << s, product)));
      break;
    }
  }
  for (std::uint64_t y : zero_bin()) {
    Eigen::MatrixXcd tm = Eigen::MatrixXcd::Identity(dim, dim);
    for (int s = 0; s < t_; ++s)
      tm = (0.5 * (tm + rung_weight(s, y, t_) * (rungs[static_cast<std::size_t>(s)] * tm))).eval();
    dense_probs_ += tm.colwise().squaredNorm().transpose();
  }
}

double ZeroPhaseModel::vector_probability(std::uint64_t basis, Rng* product_rng) const {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_);
  std::vector<std::vector<qsim::PauliRotation>> seqs;
  const long reps = evolution_.repetitions;
  if (evolution_.method == qsim::EvolutionMethod::trotter) {
    seqs.push_back(qsim::trotter_sequence(terms_, 1.0, reps));
  } else if (evolution_.method == qsim::EvolutionMethod::qdrift) {
    for (int s = 0; s < t_; ++s)
      seqs.push_back(qsim::qdrift_sequence(terms_, std::ldexp(1.0, s), reps << s, *product_rng));
  }
  auto apply_rung = [&](Eigen::VectorXcd v, int s) -> Eigen::VectorXcd {
    switch (evolution_.method) {
      case qsim::EvolutionMethod::exact:
        return qsim::expm_multiply(sparse_h_, std::ldexp(1.0, s), v);
      case qsim::EvolutionMethod::trotter:
        for (long i = 0; i < (1L << s); ++i) qsim::apply_sequence({v.data(), static_cast<std::size_t>(dim)}, seqs[0]);
        return v;
      case qsim::EvolutionMethod::qdrift:
        qsim::apply_sequence({v.data(), static_cast<std::size_t>(dim)}, seqs[static_cast<std::size_t>(s)]);
        return v;
    }
    return v;
  };
  double p = 0.0;
  for (std::uint64_t y : zero_bin()) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(static_cast<Eigen::Index>(basis)) = 1.0;
    for (int s = 0; s < t_; ++s) v = 0.5 * (v + rung_weight(s, y, t_) * apply_rung(v, s));
    p += v.squaredNorm();
  }
  return p;
}

double ZeroPhaseModel::probability(std::uint64_t basis) const {
  if (basis >> n_) throw InputError("basis index out of range");
  if (zero_operator_) return 1.0;
  if (dense_) return dense_probs_(static_cast<Eigen::Index>(basis));
  if (!per_shot_products()) {
    Rng product(evolution_.seed);
    return vector_probability(basis, &product);
  }
  double sum = 0.0;
  for (int i = 0; i < kVectorEnsembleDraws; ++i) {
    Rng product(derive_seed(evolution_.seed, {static_cast<std::uint64_t>(i)}));
    sum += vector_probability(basis, &product);
  }
  return sum / kVectorEnsembleDraws;
}

bool ZeroPhaseModel::shot(std::uint64_t basis, Rng& rng) const {
  if (basis >> n_) throw InputError("basis index out of range");
  if (!zero_operator_ && !dense_ && per_shot_products()) return rng.bernoulli(vector_probability(basis, &rng));
  return rng.bernoulli(probability(basis));
}

}  // namespace topoqk::lgz
