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

// Independent reference computations used only by tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include "topoqk/random.hpp"
#include "topoqk/tda/geometry.hpp"
#include "topoqk/tda/graph.hpp"

namespace topoqk::testing {

using Rational = boost::multiprecision::cpp_rational;

/// Rank over Q by dense Gaussian elimination with exact rationals.
inline std::size_t rational_rank(const Eigen::MatrixXd& m) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = Rational(static_cast<long long>(m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j))));
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Connected components by union-find.
inline std::size_t union_find_components(const tda::SkeletonGraph& g) {
  std::vector<std::size_t> parent(g.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  std::size_t c = 0;
  for (std::size_t v = 0; v < g.size(); ++v) c += (find(v) == v);
  return c;
}

/// All (k+1)-cliques by scanning every vertex subset.
inline std::vector<std::uint64_t> brute_force_cliques(const tda::SkeletonGraph& g, std::size_t k) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.size()); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) != k + 1) continue;
    bool ok = true;
    for (std::size_t u = 0; u < g.size() && ok; ++u)
      for (std::size_t v = u + 1; v < g.size() && ok; ++v)
        if (((m >> u) & 1U) && ((m >> v) & 1U) && !g.has_edge(u, v)) ok = false;
    if (ok) out.push_back(m);
  }
  return out;
}

inline tda::PointCloud random_cloud(Rng& rng, std::size_t n, std::size_t d = 2) {
  std::vector<std::vector<double>> pts(n, std::vector<double>(d));
  for (auto& p : pts)
    for (auto& x : p) x = rng.uniform();
  return tda::PointCloud(pts);
}

inline tda::SkeletonGraph random_graph(Rng& rng, std::size_t n, double p) {
  tda::SkeletonGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) g.add_edge(u, v);
  return g;
}

}  // namespace topoqk::testing
