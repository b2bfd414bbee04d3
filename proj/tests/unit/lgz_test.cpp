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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quantum_oracles.hpp"
#include "topoqk/errors.hpp"
#include "topoqk/lgz/dirac.hpp"
#include "topoqk/lgz/estimator.hpp"
#include "topoqk/lgz/zero_phase.hpp"
#include "topoqk/qsim/qpe.hpp"
#include "topoqk/tda/complex.hpp"
#include "topoqk/tda/graph.hpp"
#include "topoqk/tda/homology.hpp"

namespace topoqk::lgz {
namespace {

using qsim::Complex;
using qsim::EvolutionConfig;
using qsim::EvolutionMethod;
using tda::SimplicialComplex;
using tda::SkeletonGraph;

SkeletonGraph graph_of(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  SkeletonGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimplicialComplex clique_complex(const SkeletonGraph& g, std::size_t dim) {
  return tda::build_complex(tda::enumerate_cliques(g, std::min(dim, g.size() - 1)));
}

SkeletonGraph single_edge_graph() { return graph_of(2, {{0, 1}}); }
SkeletonGraph four_cycle_graph() { return graph_of(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

/// Dirac matrix assembled from the boundary matrices, placing each block at
/// the rows and columns named by the simplices' vertex masks.
Eigen::MatrixXd dirac_oracle(const SimplicialComplex& s) {
  const Eigen::Index dim = Eigen::Index{1} << s.num_vertices();
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(dim, dim);
  for (int p = 1; p <= s.max_dim(); ++p) {
    const Eigen::MatrixXd d = tda::boundary_matrix(s, static_cast<std::size_t>(p)).dense();
    const auto& rows = s.simplices(static_cast<std::size_t>(p - 1));
    const auto& cols = s.simplices(static_cast<std::size_t>(p));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const auto r = static_cast<Eigen::Index>(tda::to_mask(rows[i]));
        const auto c = static_cast<Eigen::Index>(tda::to_mask(cols[j]));
        b(r, c) = b(c, r) = d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
  }
  return b;
}

std::vector<double> sorted_eigenvalues(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

SimplicialComplex random_complex(Rng& rng, std::size_t max_n = 6) {
  const std::size_t n = 2 + rng.below(max_n - 1);
  return clique_complex(testing::random_graph(rng, n, rng.uniform(0.3, 0.9)), 1 + rng.below(3));
}

/// Zero-outcome probability of the gate-level circuit for input |j>.
double gate_level_zero(const qsim::PauliSum& h, std::uint64_t j, int t,
                       const std::function<void(std::span<Complex>, int)>& rung) {
  return qsim::phase_estimation_distribution(qsim::Statevector::basis(h.num_qubits, j), t, rung)[0];
}

TEST(Dirac, SingleEdgeExample) {
  const auto s = SimplicialComplex::closure_of(2, {{0, 1}});
  const DiracOperator b(s);
  const Eigen::MatrixXd m(b.matrix());
  EXPECT_EQ(m(3, 2), 1.0);
  EXPECT_EQ(m(3, 1), -1.0);
  EXPECT_EQ(m, m.transpose());
  EXPECT_EQ(m.cwiseAbs().sum(), 4.0);
  const auto ev = sorted_eigenvalues(m);
  EXPECT_NEAR(ev[0], -std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(ev[1], 0.0, 1e-12);
  EXPECT_NEAR(ev[2], 0.0, 1e-12);
  EXPECT_NEAR(ev[3], std::numbers::sqrt2, 1e-12);
  EXPECT_DOUBLE_EQ(rescale_factor(b), 2.02);
  const auto d = condition_diagnostics(b);
  EXPECT_NEAR(d.lambda_max, std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(*d.lambda_min_nonzero, std::numbers::sqrt2, 1e-12);
  EXPECT_NEAR(*d.kappa, 1.0, 1e-12);
}

TEST(Dirac, EdgelessComplexIsZero) {
  const auto s = SimplicialComplex::closure_of(3, {{0}, {1}, {2}});
  const DiracOperator b(s);
  EXPECT_TRUE(b.is_zero());
  EXPECT_DOUBLE_EQ(rescale_factor(b), 1.0);
  const auto d = condition_diagnostics(b);
  EXPECT_EQ(d.lambda_max, 0.0);
  EXPECT_FALSE(d.kappa.has_value());
}

TEST(Dirac, MatchesBoundaryBlockOracle) {
  Rng rng(101);
  for (int rep = 0; rep < 30; ++rep) {
    const auto s = random_complex(rng);
    EXPECT_EQ(Eigen::MatrixXd(DiracOperator(s).matrix()), dirac_oracle(s));
  }
}

TEST(Dirac, SquarePreservesHammingWeight) {
  const auto s = clique_complex(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}), 2);
  const Eigen::MatrixXd m(DiracOperator(s).matrix());
  const Eigen::MatrixXd sq = m * m;
  for (int a = 0; a < 8; ++a)
    for (int c = 0; c < 8; ++c)
      if (std::popcount(static_cast<unsigned>(a)) != std::popcount(static_cast<unsigned>(c)))
        EXPECT_EQ(sq(a, c), 0.0);
}

TEST(Dirac, RescaleBoundsSpectrum) {
  Rng rng(103);
  for (int rep = 0; rep < 40; ++rep) {
    const DiracOperator b(random_complex(rng));
    const double lambda = rescale_factor(b);
    for (double e : sorted_eigenvalues(Eigen::MatrixXd(b.matrix()))) {
      EXPECT_LE(std::abs(e), lambda);
      EXPECT_LT(std::abs(e / lambda), 1.0);
    }
    const auto d = condition_diagnostics(b);
    if (d.kappa) EXPECT_GE(*d.kappa, 1.0);
  }
}

TEST(Dirac, KernelOnCliqueStatesMatchesBetti) {
  Rng rng(107);
  for (int rep = 0; rep < 50; ++rep) {
    const auto s = random_complex(rng);
    const Eigen::MatrixXd m(DiracOperator(s).matrix());
    for (int k = 0; k + 1 <= s.max_dim() || (k <= s.max_dim() && !s.clique_truncated()); ++k) {
      const auto& simplices = s.simplices(static_cast<std::size_t>(k));
      if (simplices.empty()) continue;
      Eigen::MatrixXd cols(m.rows(), static_cast<Eigen::Index>(simplices.size()));
      for (std::size_t i = 0; i < simplices.size(); ++i)
        cols.col(static_cast<Eigen::Index>(i)) = m.col(static_cast<Eigen::Index>(tda::to_mask(simplices[i])));
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols);
      const auto sv = svd.singularValues();
      const auto nullity = static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [](double x) { return x < 1e-8; }));
      EXPECT_EQ(nullity, tda::betti_exact(s, static_cast<std::size_t>(k)).value) << "rep " << rep << " k " << k;
    }
  }
}

TEST(Dirac, ResourceGuards) {
  const auto big = SimplicialComplex::closure_of(15, {{0, 1}});
  EXPECT_THROW(DiracOperator{big}, ResourceError);
  const auto mid = SimplicialComplex::closure_of(11, {{0, 1}});
  EXPECT_THROW(condition_diagnostics(DiracOperator(mid)), ResourceError);
}

TEST(Dirac, PauliTermsAreRealAndReassemble) {
  const DiracOperator b(SimplicialComplex::closure_of(2, {{0, 1}}));
  const auto terms = scaled_terms(b, 1.0);
  EXPECT_LT((terms.to_matrix() - Eigen::MatrixXd(b.matrix()).cast<Complex>()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(terms.terms.size(), 4u);
}

TEST(Mixture, SingleCliqueIsDeterministic) {
  tda::CliqueSet cl{1, 3, {0b101}};
  auto mix = prepare_clique_mixture(cl, 5);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(mix.draw(), 0b101u);
  EXPECT_EQ(mix.draw_state().amplitudes()(5), Complex(1.0, 0.0));
}

TEST(Mixture, UniformOverTwoVertices) {
  tda::CliqueSet cl{0, 2, {0b01, 0b10}};
  auto mix = prepare_clique_mixture(cl, 9);
  int ones = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) {
    const auto m = mix.draw();
    EXPECT_EQ(std::popcount(m), 1);
    ones += (m == 0b01);
  }
  EXPECT_NEAR(ones / double(draws), 0.5, 3 * std::sqrt(0.25 / draws));
}

TEST(Mixture, RejectsEmpty) { EXPECT_THROW(prepare_clique_mixture(tda::CliqueSet{}, 0), InputError); }

TEST(ZeroPhase, MatchesGateLevelCircuit) {
  Rng rng(109);
  for (int rep = 0; rep < 6; ++rep) {
    const auto s = random_complex(rng, 4);
    const DiracOperator b(s);
    if (b.is_zero()) continue;
    const int t = 3;
    for (auto method : {EvolutionMethod::exact, EvolutionMethod::trotter, EvolutionMethod::qdrift}) {
      EvolutionConfig evo{method, 2, 77};
      evo.qdrift_mode = qsim::QdriftMode::fixed_product;
      const ZeroPhaseModel model(b, t, evo);
      const auto& h = model.terms();
      std::vector<std::vector<qsim::PauliRotation>> seqs;
      Rng product(77);
      for (int r = 0; r < t; ++r) {
        const double time = std::ldexp(1.0, r);
        seqs.push_back(method == EvolutionMethod::trotter ? qsim::trotter_sequence(h, time, 2L << r)
                                                          : qsim::qdrift_sequence(h, time, 2L << r, product));
      }
      const Eigen::MatrixXcd hm = h.to_matrix();
      auto rung = [&](std::span<Complex> v, int r) {
        if (method == EvolutionMethod::exact) {
          Eigen::Map<Eigen::VectorXcd> m(v.data(), static_cast<Eigen::Index>(v.size()));
          m = (qsim::exact_unitary(hm, std::ldexp(1.0, r)) * m).eval();
        } else {
          qsim::apply_sequence(v, seqs[static_cast<std::size_t>(r)]);
        }
      };
      for (std::uint64_t j = 0; j < b.dim(); ++j)
        EXPECT_NEAR(model.probability(j), gate_level_zero(h, j, t, rung), 1e-10);
    }
  }
}

TEST(ZeroPhase, ZeroBinSumsNeighbouringOutcomes) {
  const DiracOperator b(SimplicialComplex::closure_of(3, {{0, 1}, {1, 2}}));
  const ZeroPhaseModel wide(b, 4, {}, 2);
  const auto& h = wide.terms();
  const Eigen::MatrixXcd hm = h.to_matrix();
  for (std::uint64_t j : {1u, 2u, 3u}) {
    const auto probs = qsim::phase_estimation_distribution(qsim::Statevector::basis(3, j), 4, [&](std::span<Complex> v, int r) {
      Eigen::Map<Eigen::VectorXcd> m(v.data(), static_cast<Eigen::Index>(v.size()));
      m = (qsim::exact_unitary(hm, std::ldexp(1.0, r)) * m).eval();
    });
    EXPECT_NEAR(wide.probability(j), probs[0] + probs[1] + probs[2] + probs[14] + probs[15], 1e-10);
  }
  EXPECT_THROW(ZeroPhaseModel(b, 2, {}, 2), InputError);
}

/// Per-shot qDrift expectation by enumerating every sequence of drawn terms.
double enumerated_qdrift_zero(const qsim::PauliSum& h, std::uint64_t j, int t, long samples) {
  const double lambda = h.one_norm();
  const double angle = lambda / static_cast<double>(samples);
  std::vector<Eigen::MatrixXcd> factors;
  std::vector<double> weights;
  for (const auto& term : h.terms) {
    const double a = term.coefficient > 0 ? angle : -angle;
    factors.push_back(testing::expm_series(Complex(0, -a) * testing::pauli_matrix(term.label(h.num_qubits))));
    weights.push_back(std::abs(term.coefficient) / lambda);
  }
  long draws = 0;
  for (int s = 0; s < t; ++s) draws += samples << s;
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << h.num_qubits);
  std::vector<std::size_t> pick(static_cast<std::size_t>(draws), 0);
  double total = 0.0;
  while (true) {
    double w = 1.0;
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(static_cast<Eigen::Index>(j)) = 1.0;
    std::size_t pos = 0;
    for (int s = 0; s < t; ++s) {
      Eigen::VectorXcd u = v;
      for (long i = 0; i < (samples << s); ++i, ++pos) {
        u = factors[pick[pos]] * u;
        w *= weights[pick[pos]];
      }
      v = 0.5 * (v + u);
    }
    total += w * v.squaredNorm();
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == factors.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return total;
}

TEST(ZeroPhase, QdriftEnsembleMatchesEnumeration) {
  const DiracOperator b(SimplicialComplex::closure_of(2, {{0, 1}}));
  for (auto [t, samples] : {std::pair{1, 1L}, {2, 1L}, {1, 3L}, {2, 2L}}) {
    const ZeroPhaseModel model(b, t, {EvolutionMethod::qdrift, static_cast<int>(samples), 0});
    for (std::uint64_t j = 0; j < 4; ++j)
      EXPECT_NEAR(model.probability(j), enumerated_qdrift_zero(model.terms(), j, t, samples), 1e-12)
          << "t=" << t << " N=" << samples << " j=" << j;
  }
}

TEST(ZeroPhase, LargeRegisterMatchesEmbeddedSmallComplex) {
  const auto small = SimplicialComplex::closure_of(2, {{0, 1}});
  std::vector<tda::Simplex> gens{{0, 1}};
  for (std::uint32_t v = 2; v < 11; ++v) gens.push_back({v});
  const auto large = SimplicialComplex::closure_of(11, gens);
  for (auto method : {EvolutionMethod::exact, EvolutionMethod::trotter}) {
    const EvolutionConfig evo{method, 1, 0};
    const ZeroPhaseModel a(DiracOperator(small), 4, evo), c(DiracOperator(large), 4, evo);
    ASSERT_FALSE(c.dense());
    EXPECT_NEAR(c.probability(0b01), a.probability(0b01), 1e-9);
    EXPECT_NEAR(c.probability(0b10), a.probability(0b10), 1e-9);
    EXPECT_NEAR(c.probability(0b100), 1.0, 1e-9);
  }
}

TEST(Estimator, SingleEdgeZeroFraction) {
  const auto g = single_edge_graph();
  const auto s = clique_complex(g, 1);
  LgzConfig cfg;
  cfg.shots = 4000;
  cfg.seed = 3;
  const auto e = lgz_estimate(s, g, 0, cfg);
  EXPECT_EQ(e.clique_count, 2u);
  EXPECT_DOUBLE_EQ(e.rescale_factor, 2.02);
  const double p = exact_zero_phase_probability(s, 0, 6, {});
  EXPECT_GT(p, 0.5);
  EXPECT_LT(p, 0.52);
  const double sigma = std::sqrt(p * (1 - p) / 4000.0);
  EXPECT_NEAR(e.zero_count / 4000.0, p, 3 * sigma);
  EXPECT_NEAR(e.beta_estimate, 1.0, 2 * (3 * sigma + 0.02));
}

TEST(Estimator, LargePhaseRegisterConvergesToSpectralOverlap) {
  const auto s = clique_complex(single_edge_graph(), 1);
  EXPECT_NEAR(exact_zero_phase_probability(s, 0, 14, {}), 0.5, 1e-3);
}

TEST(Estimator, IsolatedVerticesAlwaysReadZero) {
  const SkeletonGraph g(3);
  const auto s = clique_complex(g, 1);
  LgzConfig cfg;
  cfg.shots = 50;
  const auto e = lgz_estimate(s, g, 0, cfg);
  EXPECT_EQ(e.zero_count, 50);
  EXPECT_DOUBLE_EQ(e.beta_estimate, 3.0);
  EXPECT_DOUBLE_EQ(exact_zero_phase_probability(s, 0, 6, {}), 1.0);
  const auto none = lgz_estimate(s, g, 1, cfg);
  EXPECT_EQ(none.clique_count, 0u);
  EXPECT_EQ(none.shots, 0);
  EXPECT_EQ(none.beta_estimate, 0.0);
}

TEST(Estimator, FourCycleFirstBetti) {
  const auto g = four_cycle_graph();
  const auto s = clique_complex(g, 2);
  LgzConfig cfg;
  cfg.ancillas = 7;
  cfg.shots = 4000;
  cfg.seed = 17;
  const auto e = lgz_estimate(s, g, 1, cfg);
  EXPECT_EQ(e.clique_count, 4u);
  EXPECT_NEAR(e.beta_estimate, 1.0, 0.35);
}

TEST(Estimator, LeakageShrinksWithRegisterSize) {
  const auto s = clique_complex(four_cycle_graph(), 2);
  const double target = 1.0 / 4.0;
  double prev = 1.0;
  for (int t : {4, 6, 8}) {
    const double leak = exact_zero_phase_probability(s, 1, t, {}) - target;
    EXPECT_GE(leak, -1e-12);
    EXPECT_LT(leak, prev);
    prev = leak;
  }
}

TEST(Estimator, ConsistentWithOracleAcrossSeeds) {
  const auto g = four_cycle_graph();
  const auto s = clique_complex(g, 2);
  LgzConfig cfg;
  cfg.ancillas = 7;
  cfg.shots = 4000;
  const double p = exact_zero_phase_probability(s, 1, 7, {});
  const double sigma = 4 * std::sqrt(p * (1 - p) / 4000.0);
  const DiracOperator b(s);
  const ZeroPhaseModel model(b, 7, {});
  const auto cl = tda::enumerate_cliques(g, 1)[1];
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    cfg.seed = seed;
    const auto e = lgz_estimate(model, cl, cfg);
    EXPECT_DOUBLE_EQ(e.beta_estimate * static_cast<double>(e.shots),
                     static_cast<double>(e.zero_count) * static_cast<double>(e.clique_count));
    inside += std::abs(e.beta_estimate - p * 4) <= 3 * sigma;
  }
  EXPECT_GE(inside, 99);
}

TEST(Estimator, WeightRegisterCircuitAgreesStatistically) {
  const auto g = graph_of(3, {{0, 1}, {1, 2}});
  const auto s = clique_complex(g, 2);
  LgzConfig cfg;
  cfg.ancillas = 4;
  cfg.shots = 600;
  cfg.seed = 5;
  const double p = exact_zero_phase_probability(s, 0, 4, {});
  const double sigma = 3 * std::sqrt(p * (1 - p) / 600.0);
  cfg.weight_register = true;
  const auto circuit = lgz_estimate(s, g, 0, cfg);
  EXPECT_NEAR(circuit.beta_estimate, 3 * p, 4 * sigma);
  EXPECT_EQ(circuit.shots, 600);
}

TEST(Estimator, DegradationOrdering) {
  for (const auto& g : {single_edge_graph(), four_cycle_graph()}) {
    const auto s = clique_complex(g, 2);
    const std::size_t k = g.size() == 2 ? 0 : 1;
    const double spectral = exact_zero_phase_probability(s, k, 14, {});
    const double exact = std::abs(exact_zero_phase_probability(s, k, 6, {}) - spectral);
    const double trotter = std::abs(exact_zero_phase_probability(s, k, 6, {EvolutionMethod::trotter, 4}) - spectral);
    EXPECT_LE(exact, trotter + 1e-12);
    double prev = 1e300;
    for (int reps : {1, 2, 5, 10}) {
      const double err = std::abs(exact_zero_phase_probability(s, k, 6, {EvolutionMethod::qdrift, reps}) - spectral);
      EXPECT_LE(err, prev + 1e-12) << reps;
      prev = err;
    }
  }
}

TEST(Estimator, ValidatesInputs) {
  const auto g = four_cycle_graph();
  const auto s = clique_complex(g, 1);
  LgzConfig cfg;
  cfg.shots = 0;
  EXPECT_THROW(lgz_estimate(s, g, 0, cfg), InputError);
  cfg.shots = 10;
  cfg.ancillas = 0;
  EXPECT_THROW(lgz_estimate(s, g, 0, cfg), InputError);
  cfg.ancillas = 3;
  const auto truncated = clique_complex(graph_of(3, {{0, 1}, {1, 2}, {0, 2}}), 1);
  EXPECT_THROW(lgz_estimate(truncated, graph_of(3, {{0, 1}, {1, 2}, {0, 2}}), 1, cfg), InputError);
  EXPECT_THROW(lgz_estimate(s, graph_of(4, {{0, 1}}), 1, cfg), InputError);
}

}  // namespace
}  // namespace topoqk::lgz
