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

#include "topoqk/tda/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "topoqk/errors.hpp"

namespace topoqk::tda {

SkeletonGraph::SkeletonGraph(std::size_t n) : n_(n), adj_(n, 0) {
  if (n > kMaxGraphVertices)
    throw InputError("skeleton graphs support at most 64 vertices, got " + std::to_string(n));
}

void SkeletonGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loops are not allowed");
  adj_[u] |= VertexMask{1} << v;
  adj_[v] |= VertexMask{1} << u;
}

std::size_t SkeletonGraph::edge_count() const {
  std::size_t deg = 0;
  for (VertexMask a : adj_) deg += static_cast<std::size_t>(std::popcount(a));
  return deg / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> SkeletonGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

SkeletonGraph vr_skeleton(const DistanceMatrix& dm, double eps) {
  if (eps < 0.0) throw InputError("threshold must be >= 0");
  SkeletonGraph g(dm.size());
  for (std::size_t i = 0; i < dm.size(); ++i)
    for (std::size_t j = i + 1; j < dm.size(); ++j)
      if (dm(i, j) <= eps) g.add_edge(i, j);
  return g;
}

bool CliqueSet::contains(VertexMask m) const {
  return std::binary_search(members.begin(), members.end(), m);
}

namespace {

// Extends `clique` by vertices in `candidates` (all higher than any member),
// recording every clique up to size k_max + 1.
void extend(const SkeletonGraph& g, VertexMask clique, std::size_t size, VertexMask candidates,
            std::size_t k_max, std::vector<CliqueSet>& out) {
  out[size - 1].members.push_back(clique);
  if (size == k_max + 1) return;
  while (candidates != 0) {
    const auto v = static_cast<std::size_t>(std::countr_zero(candidates));
    candidates &= candidates - 1;
    extend(g, clique | (VertexMask{1} << v), size + 1, candidates & g.neighbors(v), k_max, out);
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return static_cast<std::size_t>(r + 0.5);
}

}  // namespace

std::vector<CliqueSet> enumerate_cliques(const SkeletonGraph& g, std::size_t k_max) {
  if (k_max + 1 > g.size())
    throw InputError("clique order k_max + 1 = " + std::to_string(k_max + 1) +
                     " exceeds vertex count " + std::to_string(g.size()));
  std::vector<CliqueSet> out(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) {
    out[k].order = k;
    out[k].num_vertices = g.size();
  }
  for (std::size_t v = 0; v < g.size(); ++v) {
    const VertexMask higher = g.neighbors(v) & ~((VertexMask{2} << v) - 1);
    extend(g, VertexMask{1} << v, 1, higher, k_max, out);
  }
  for (auto& cs : out) std::sort(cs.members.begin(), cs.members.end());
  return out;
}

double clique_density(const SkeletonGraph& g, std::size_t k) {
  auto cliques = enumerate_cliques(g, k);
  return static_cast<double>(cliques[k].size()) / static_cast<double>(binomial(g.size(), k + 1));
}

}  // namespace topoqk::tda
