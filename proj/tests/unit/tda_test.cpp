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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "topoqk/errors.hpp"
#include "topoqk/tda/complex.hpp"
#include "topoqk/tda/filtration.hpp"
#include "topoqk/tda/geometry.hpp"
#include "topoqk/tda/graph.hpp"
#include "topoqk/tda/homology.hpp"

namespace topoqk::tda {
namespace {

using testing::brute_force_cliques;
using testing::random_cloud;
using testing::random_graph;
using testing::rational_rank;
using testing::union_find_components;

PointCloud unit_square() { return PointCloud({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

SkeletonGraph complete_graph(std::size_t n) {
  SkeletonGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SkeletonGraph four_cycle() {
  SkeletonGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  return g;
}

TEST(PointCloud, RejectsBadInput) {
  EXPECT_THROW(PointCloud({}), InputError);
  EXPECT_THROW(PointCloud({{0, 0}, {1}}), InputError);
  EXPECT_THROW(PointCloud({{0, NAN}}), InputError);
  EXPECT_THROW(PointCloud({{0, INFINITY}}), InputError);
}

TEST(DistanceMatrix, Examples) {
  auto single = distance_matrix(PointCloud({{0, 0}}));
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single(0, 0), 0.0);

  auto pair = distance_matrix(PointCloud({{0, 0}, {3, 4}}));
  EXPECT_DOUBLE_EQ(pair(0, 1), 5.0);
  EXPECT_DOUBLE_EQ(pair(1, 0), 5.0);

  auto sq = distance_matrix(unit_square());
  EXPECT_DOUBLE_EQ(sq(0, 1), 1.0);
  EXPECT_DOUBLE_EQ(sq(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(sq(0, 2), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(sq(1, 3), std::sqrt(2.0));
}

TEST(DistanceMatrix, MetricProperties) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto dm = distance_matrix(random_cloud(rng, 8, 3));
    for (std::size_t i = 0; i < 8; ++i)
      for (std::size_t j = 0; j < 8; ++j) {
        EXPECT_EQ(dm(i, j), dm(j, i));
        for (std::size_t k = 0; k < 8; ++k) EXPECT_LE(dm(i, k), dm(i, j) + dm(j, k) + 1e-12);
      }
  }
}

TEST(ThresholdSequence, Examples) {
  std::vector<DistanceMatrix> one{distance_matrix(PointCloud({{0, 0}, {1, 0}, {0, 1}}))};
  // distances 1, 1, sqrt(2)
  auto t = threshold_sequence(one, 1e-9);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0], 0.0);
  EXPECT_DOUBLE_EQ(t[1], 1.0);
  EXPECT_DOUBLE_EQ(t[2], std::sqrt(2.0));

  std::vector<DistanceMatrix> two{one[0], one[0]};
  EXPECT_EQ(threshold_sequence(two, 1e-9), t);

  std::vector<DistanceMatrix> close{DistanceMatrix(3, {0, 1.0, 1.0 + 1e-12,  //
                                                       1.0, 0, 1.0,           //
                                                       1.0 + 1e-12, 1.0, 0})};
  auto c = threshold_sequence(close, 1e-9);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[1], 1.0);

  EXPECT_EQ(threshold_sequence(std::vector<DistanceMatrix>{}, 1e-9).size(), 1u);
  EXPECT_THROW(threshold_sequence(one, 0.0), InputError);
  EXPECT_THROW(ThresholdSequence({0.0, 1.0, 1.0}), InputError);
  EXPECT_THROW(ThresholdSequence({0.5}), InputError);
}

TEST(ThresholdSequence, LengthBound) {
  Rng rng(3);
  std::vector<DistanceMatrix> dms;
  std::size_t bound = 1;
  for (std::size_t n : {3u, 5u, 7u}) {
    dms.push_back(distance_matrix(random_cloud(rng, n)));
    bound += n * (n - 1) / 2;
  }
  auto t = threshold_sequence(dms);
  EXPECT_LE(t.size(), bound);
  EXPECT_EQ(t.size(), bound);  // continuous random distances are distinct
}

TEST(VrSkeleton, Examples) {
  auto dm = distance_matrix(unit_square());
  auto g = vr_skeleton(dm, 1.2);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_EQ(vr_skeleton(dm, 0.0).edge_count(), 0u);
  EXPECT_EQ(vr_skeleton(dm, dm.max()).edge_count(), 6u);
  EXPECT_THROW(vr_skeleton(dm, -1.0), InputError);
}

TEST(VrSkeleton, DuplicatePointsConnectAtZero) {
  auto dm = distance_matrix(PointCloud({{0, 0}, {0, 0}, {1, 0}}));
  auto g = vr_skeleton(dm, 0.0);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EnumerateCliques, Examples) {
  auto k4 = enumerate_cliques(complete_graph(4), 3);
  EXPECT_EQ(k4[0].size(), 4u);
  EXPECT_EQ(k4[1].size(), 6u);
  EXPECT_EQ(k4[2].size(), 4u);
  EXPECT_EQ(k4[3].size(), 1u);

  auto empty = enumerate_cliques(SkeletonGraph(5), 2);
  EXPECT_EQ(empty[0].size(), 5u);
  EXPECT_EQ(empty[1].size(), 0u);
  EXPECT_EQ(empty[2].size(), 0u);

  auto cyc = enumerate_cliques(four_cycle(), 2);
  EXPECT_EQ(cyc[1].size(), 4u);
  EXPECT_EQ(cyc[2].size(), 0u);
  EXPECT_EQ(cyc[2].members, brute_force_cliques(four_cycle(), 2));

  EXPECT_THROW(enumerate_cliques(SkeletonGraph(3), 3), InputError);
}

TEST(EnumerateCliques, MatchesBruteForceAndIsDownwardClosed) {
  Rng rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.below(10);
    const std::size_t k_max = std::min<std::size_t>(4, n - 1);
    auto g = random_graph(rng, n, rng.uniform(0.2, 0.9));
    auto cl = enumerate_cliques(g, k_max);
    for (std::size_t k = 0; k <= k_max; ++k) {
      EXPECT_EQ(cl[k].members, brute_force_cliques(g, k));
      for (auto m : cl[k].members) {
        EXPECT_EQ(static_cast<std::size_t>(std::popcount(m)), k + 1);
        if (k == 0) continue;
        for (auto rest = m; rest != 0; rest &= rest - 1)
          EXPECT_TRUE(cl[k - 1].contains(m & ~(rest & (~rest + 1))));
      }
    }
  }
}

TEST(CliqueDensity, Examples) {
  for (std::size_t k = 0; k < 5; ++k) EXPECT_DOUBLE_EQ(clique_density(complete_graph(5), k), 1.0);
  EXPECT_EQ(clique_density(SkeletonGraph(4), 1), 0.0);
  EXPECT_NEAR(clique_density(four_cycle(), 1), 4.0 / 6.0, 1e-12);
}

TEST(BuildComplex, Examples) {
  auto k3 = build_complex(enumerate_cliques(complete_graph(3), 2));
  EXPECT_EQ(k3.count(0), 3u);
  EXPECT_EQ(k3.count(1), 3u);
  EXPECT_EQ(k3.count(2), 1u);

  auto pts = build_complex(enumerate_cliques(complete_graph(3), 0));
  EXPECT_EQ(pts.max_dim(), 0);
  EXPECT_EQ(pts.count(0), 3u);

  auto cyc = build_complex(enumerate_cliques(four_cycle(), 2));
  EXPECT_EQ(cyc.count(0), 4u);
  EXPECT_EQ(cyc.count(1), 4u);
  EXPECT_EQ(cyc.count(2), 0u);
  EXPECT_EQ(cyc.simplices(1).front(), (Simplex{0, 1}));
}

TEST(BuildComplex, RejectsNonClosedFamily) {
  auto cl = enumerate_cliques(complete_graph(3), 2);
  cl[1].members.erase(cl[1].members.begin());
  EXPECT_THROW(build_complex(cl), StructuralError);
  EXPECT_THROW(SimplicialComplex(3, {{{0}, {1}}, {{0, 2}}}), StructuralError);
}

TEST(BoundaryMatrix, TriangleColumnSigns) {
  auto s = SimplicialComplex::closure_of(3, {{0, 1, 2}});
  auto b = boundary_matrix(s, 2).dense();
  // rows: {0,1}, {0,2}, {1,2}
  EXPECT_EQ(b(2, 0), 1.0);
  EXPECT_EQ(b(1, 0), -1.0);
  EXPECT_EQ(b(0, 0), 1.0);
}

TEST(BoundaryMatrix, EdgeColumnSigns) {
  auto s = SimplicialComplex::closure_of(2, {{0, 1}});
  auto b = boundary_matrix(s, 1).dense();
  EXPECT_EQ(b(1, 0), 1.0);   // {1}
  EXPECT_EQ(b(0, 0), -1.0);  // {0}
  EXPECT_THROW(boundary_matrix(s, 2), InputError);
  EXPECT_THROW(boundary_matrix(s, 0), InputError);
}

TEST(BoundaryMatrix, SquaresToZeroOnK4) {
  auto s = build_complex(enumerate_cliques(complete_graph(4), 3));
  for (std::size_t p = 1; p < 3; ++p) {
    Eigen::MatrixXd prod = boundary_matrix(s, p).dense() * boundary_matrix(s, p + 1).dense();
    EXPECT_EQ(prod.cwiseAbs().maxCoeff(), 0.0);
  }
  for (std::size_t p = 1; p <= 3; ++p) {
    for (const auto& col : boundary_matrix(s, p).columns) EXPECT_EQ(col.size(), p + 1);
  }
}

TEST(BettiExact, Examples) {
  auto cyc = build_complex(enumerate_cliques(four_cycle(), 2));
  EXPECT_EQ(betti_exact(cyc, 0).value, 1u);
  EXPECT_EQ(betti_exact(cyc, 1).value, 1u);

  auto k4 = build_complex(enumerate_cliques(complete_graph(4), 3));
  EXPECT_EQ(betti_exact(k4, 0).value, 1u);
  EXPECT_EQ(betti_exact(k4, 1).value, 0u);
  EXPECT_EQ(betti_exact(k4, 2).value, 0u);

  auto k3 = build_complex(enumerate_cliques(complete_graph(3), 2));
  EXPECT_EQ(betti_exact(k3, 0).value, 1u);
  EXPECT_EQ(betti_exact(k3, 1).value, 0u);
  EXPECT_EQ(betti_exact(k3, 2).value, 0u);

  auto two_edges = SimplicialComplex::closure_of(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(betti_exact(two_edges, 0).value, 2u);
  EXPECT_EQ(betti_exact(two_edges, 1).value, 0u);
}

TEST(BettiExact, FlagsTruncation) {
  // K_4 enumerated only to edges: beta_1 would read 3 instead of 0.
  auto k4 = build_complex(enumerate_cliques(complete_graph(4), 1));
  auto b1 = betti_exact(k4, 1);
  EXPECT_TRUE(b1.upper_truncated);
  EXPECT_EQ(b1.value, 3u);
  EXPECT_FALSE(betti_exact(k4, 0).upper_truncated);
  // A 4-cycle has no triangles at all: stopping at edges loses nothing.
  auto cyc = build_complex(enumerate_cliques(four_cycle(), 2));
  EXPECT_FALSE(betti_exact(cyc, 1).upper_truncated);
}

TEST(BettiExact, TorsionDistinguishesFields) {
  // Minimal 6-vertex triangulation of RP^2: H_1 = Z/2, so beta_1 is 0 over
  // Q but 1 over GF(2).
  auto rp2 = SimplicialComplex::closure_of(
      6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4},
          {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}});
  EXPECT_EQ(euler_characteristic(rp2), 1);
  EXPECT_EQ(betti_exact(rp2, 1, Field::rational).value, 0u);
  EXPECT_EQ(betti_exact(rp2, 2, Field::rational).value, 0u);
  EXPECT_EQ(betti_exact(rp2, 1, Field::gf2).value, 1u);
  EXPECT_EQ(betti_exact(rp2, 2, Field::gf2).value, 1u);
}

TEST(EulerCharacteristic, Examples) {
  auto cyc = build_complex(enumerate_cliques(four_cycle(), 2));
  EXPECT_EQ(euler_characteristic(cyc), 0);
  auto k3 = build_complex(enumerate_cliques(complete_graph(3), 2));
  EXPECT_EQ(euler_characteristic(k3), 1);
}

// Random clique complexes: d d = 0, Euler identity, beta_0 = components, and
// agreement with a dense rational kernel/image computation.
TEST(Homology, RandomComplexProperties) {
  Rng rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + rng.below(9);
    auto g = random_graph(rng, n, rng.uniform(0.2, 0.9));
    auto s = build_complex(enumerate_cliques(g, n - 1));  // full clique complex
    for (int p = 1; p + 1 <= s.max_dim(); ++p) {
      Eigen::MatrixXd prod = boundary_matrix(s, p).dense() * boundary_matrix(s, p + 1).dense();
      if (prod.size() > 0) EXPECT_EQ(prod.cwiseAbs().maxCoeff(), 0.0);
    }
    long alt = 0;
    for (int k = 0; k <= s.max_dim(); ++k) {
      const auto b = betti_exact(s, static_cast<std::size_t>(k));
      EXPECT_FALSE(b.upper_truncated);
      alt += (k % 2 == 0) ? static_cast<long>(b.value) : -static_cast<long>(b.value);

      const std::size_t ck = s.count(static_cast<std::size_t>(k));
      const std::size_t rk = k >= 1 ? rational_rank(boundary_matrix(s, k).dense()) : 0;
      const std::size_t rk1 =
          k + 1 <= s.max_dim() ? rational_rank(boundary_matrix(s, k + 1).dense()) : 0;
      EXPECT_EQ(b.value, ck - rk - rk1);
    }
    EXPECT_EQ(alt, euler_characteristic(s));
    EXPECT_EQ(betti_exact(s, 0).value, union_find_components(g));
  }
}

TEST(VrFiltration, SquareExample) {
  auto dm = distance_matrix(unit_square());
  auto f = vr_filtration(dm, ThresholdSequence({0.0, 1.2, 1.5}), 1);
  ASSERT_EQ(f.size(), 3u);
  auto s0 = f.complex_at(0);
  EXPECT_EQ(s0.count(0), 4u);
  EXPECT_EQ(s0.count(1), 0u);
  auto s1 = f.complex_at(1);
  EXPECT_EQ(s1.count(1), 4u);
  EXPECT_EQ(s1.count(2), 0u);
  auto s2 = f.complex_at(2);
  EXPECT_EQ(s2.count(1), 6u);
  EXPECT_EQ(s2.count(2), 4u);
  // clique_dim = k_max + 1 = 2 < n - 1 = 3, and the triangles extend to K_4.
  EXPECT_TRUE(s2.clique_truncated());
  EXPECT_FALSE(s1.clique_truncated());

  auto single = vr_filtration(dm, ThresholdSequence({0.0}), 1);
  ASSERT_EQ(single.size(), 1u);
  EXPECT_EQ(single.complex_at(0).count(0), 4u);
  EXPECT_EQ(single.complex_at(0).count(1), 0u);
}

TEST(VrFiltration, NestedAndConsistentWithSkeleton) {
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    auto dm = distance_matrix(random_cloud(rng, 7));
    std::vector<DistanceMatrix> dms{dm};
    auto thr = threshold_sequence(dms);
    auto f = vr_filtration(dm, thr, 2);
    for (std::size_t j = 0; j < f.size(); ++j) {
      auto sj = f.complex_at(j);
      auto direct = build_complex(enumerate_cliques(vr_skeleton(dm, thr[j]), 3));
      for (std::size_t p = 0; p <= 3; ++p) EXPECT_EQ(sj.simplices(p), direct.simplices(p));
      if (j + 1 < f.size()) {
        auto next = f.complex_at(j + 1);
        for (std::size_t p = 0; p <= 3; ++p)
          for (const auto& s : sj.simplices(p)) EXPECT_TRUE(next.index_of(s).has_value());
      }
    }
  }
}

TEST(FiltrationBettiNumbers, MatchesPerComplexBetti) {
  Rng rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t n = 3 + rng.below(8);
    auto dm = distance_matrix(random_cloud(rng, n));
    std::vector<DistanceMatrix> dms{dm};
    auto f = vr_filtration(dm, threshold_sequence(dms), 2);
    for (auto field : {Field::rational, Field::gf2}) {
      auto table = filtration_betti_numbers(f, 2, field);
      for (std::size_t j = 0; j < f.size(); ++j) {
        auto sj = f.complex_at(j);
        for (std::size_t k = 0; k <= 2; ++k)
          EXPECT_EQ(table[k][j], betti_exact(sj, k, field).value) << "j=" << j << " k=" << k;
      }
    }
  }
}

TEST(FiltrationBettiNumbers, SinglePoint) {
  auto dm = distance_matrix(PointCloud({{0.5, 0.5}}));
  auto f = vr_filtration(dm, ThresholdSequence({0.0, 1.0, 2.0}), 2);
  auto table = filtration_betti_numbers(f, 2);
  EXPECT_EQ(table[0], (std::vector<std::size_t>{1, 1, 1}));
  EXPECT_EQ(table[1], (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(table[2], (std::vector<std::size_t>{0, 0, 0}));
}

}  // namespace
}  // namespace topoqk::tda
