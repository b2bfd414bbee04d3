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

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "topoqk/tda/geometry.hpp"

namespace topoqk::tda {

/// Vertex subsets are encoded as bitmasks, bit v <-> vertex v.
using VertexMask = std::uint64_t;
inline constexpr std::size_t kMaxGraphVertices = 64;

/// Undirected simple graph on vertices [0, n), n <= 64.
class SkeletonGraph {
 public:
  explicit SkeletonGraph(std::size_t n);

  std::size_t size() const { return n_; }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t edge_count() const;
  /// Edges as (u, v) with u < v, lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

 private:
  std::size_t n_;
  std::vector<VertexMask> adj_;
};

/// Closed-threshold skeleton: edge {i, j} iff d(i, j) <= eps.
SkeletonGraph vr_skeleton(const DistanceMatrix& dm, double eps);

/// The (k+1)-cliques of a graph as Hamming-weight-(k+1) bitstrings,
/// sorted by numeric value.
struct CliqueSet {
  std::size_t order = 0;
  std::size_t num_vertices = 0;
  std::vector<VertexMask> members;

  std::size_t size() const { return members.size(); }
  bool empty() const { return members.empty(); }
  bool contains(VertexMask m) const;
};

/// All cliques of orders 0..k_max. Requires k_max + 1 <= n.
std::vector<CliqueSet> enumerate_cliques(const SkeletonGraph& g, std::size_t k_max);

/// zeta_k = |Cl_k(G)| / C(n, k+1). Requires k + 1 <= n.
double clique_density(const SkeletonGraph& g, std::size_t k);

}  // namespace topoqk::tda
