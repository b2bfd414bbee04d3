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

#include "topoqk/tda/filtration.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "topoqk/errors.hpp"

namespace topoqk::tda {

Filtration::Filtration(ThresholdSequence thresholds, DistanceMatrix distances,
                       std::size_t clique_dim, std::vector<std::vector<Simplex>> simplices,
                       std::vector<std::vector<std::uint32_t>> entries)
    : thresholds_(std::move(thresholds)),
      distances_(std::move(distances)),
      clique_dim_(clique_dim),
      simplices_(std::move(simplices)),
      entries_(std::move(entries)),
      edges_at_(thresholds_.size(), 0) {
  if (simplices_.size() != entries_.size()) throw InputError("filtration shape mismatch");
  if (simplices_.size() > 1) {
    for (auto e : entries_[1]) ++edges_at_[e];
    std::partial_sum(edges_at_.begin(), edges_at_.end(), edges_at_.begin());
  }
}

SimplicialComplex Filtration::complex_at(std::size_t j) const {
  if (j >= size()) throw InputError("filtration index out of range");
  std::vector<std::vector<Simplex>> by_dim(simplices_.size());
  for (std::size_t p = 0; p < simplices_.size(); ++p)
    for (std::size_t i = 0; i < simplices_[p].size(); ++i)
      if (entries_[p][i] <= j) by_dim[p].push_back(simplices_[p][i]);

  // Truncated iff some top simplex still extends to a larger clique.
  bool truncated = false;
  if (clique_dim_ + 1 < num_vertices()) {
    const auto g = skeleton_at(j);
    for (const auto& s : by_dim.back()) {
      VertexMask common = ~VertexMask{0};
      for (auto v : s) common &= g.neighbors(v);
      if (common != 0) {
        truncated = true;
        break;
      }
    }
  }
  return SimplicialComplex(num_vertices(), std::move(by_dim), truncated);
}

SkeletonGraph Filtration::skeleton_at(std::size_t j) const {
  if (j >= size()) throw InputError("filtration index out of range");
  SkeletonGraph g(num_vertices());
  if (simplices_.size() > 1)
    for (std::size_t i = 0; i < simplices_[1].size(); ++i)
      if (entries_[1][i] <= j) g.add_edge(simplices_[1][i][0], simplices_[1][i][1]);
  return g;
}

std::size_t Filtration::edge_count_at(std::size_t j) const { return edges_at_.at(j); }

Filtration vr_filtration(const DistanceMatrix& dm, const ThresholdSequence& thresholds,
                         std::size_t k_max) {
  const std::size_t n = dm.size();
  const double eps_max = thresholds[thresholds.size() - 1];
  const auto g = vr_skeleton(dm, eps_max);
  const std::size_t clique_dim = std::min(k_max + 1, n - 1);
  const auto cliques = enumerate_cliques(g, clique_dim);

  std::vector<std::vector<Simplex>> simplices(clique_dim + 1);
  std::vector<std::vector<std::uint32_t>> entries(clique_dim + 1);
  for (std::size_t p = 0; p <= clique_dim; ++p) {
    for (VertexMask m : cliques[p].members) simplices[p].push_back(to_simplex(m));
    std::sort(simplices[p].begin(), simplices[p].end());
    for (const auto& s : simplices[p]) {
      double diam = 0.0;
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) diam = std::max(diam, dm(s[a], s[b]));
      entries[p].push_back(static_cast<std::uint32_t>(thresholds.first_at_least(diam)));
    }
  }
  return Filtration(thresholds, dm, clique_dim, std::move(simplices), std::move(entries));
}

std::vector<std::vector<std::size_t>> filtration_betti_numbers(const Filtration& f,
                                                               std::size_t k_max, Field field) {
  const std::size_t q1 = f.size();
  const std::size_t top = std::min(k_max + 1, f.clique_dim());

  // Per dimension: permutation into entry order and its inverse.
  std::vector<std::vector<std::size_t>> order(top + 1), position(top + 1);
  for (std::size_t p = 0; p <= top; ++p) {
    const auto& e = f.entries(p);
    order[p].resize(e.size());
    std::iota(order[p].begin(), order[p].end(), std::size_t{0});
    std::stable_sort(order[p].begin(), order[p].end(),
                     [&](std::size_t a, std::size_t b) { return e[a] < e[b]; });
    position[p].resize(e.size());
    for (std::size_t i = 0; i < order[p].size(); ++i) position[p][order[p][i]] = i;
  }

  // rank_at[p][j] = rank of d_p restricted to S_j.
  std::vector<std::vector<std::size_t>> rank_at(top + 2, std::vector<std::size_t>(q1, 0));
  std::vector<bool> cleared;
  for (std::size_t p = top; p >= 1; --p) {
    const auto& cols = f.simplices(p);
    const auto& rows = f.simplices(p - 1);
    std::vector<SparseColumn> columns(cols.size());
    Simplex face(p);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto& sigma = cols[order[p][i]];
      auto& col = columns[i];
      std::vector<std::pair<std::uint32_t, int>> entries;
      for (std::size_t v = 0; v <= p; ++v) {
        std::copy(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(v), face.begin());
        std::copy(sigma.begin() + static_cast<std::ptrdiff_t>(v) + 1, sigma.end(),
                  face.begin() + static_cast<std::ptrdiff_t>(v));
        const auto lex = static_cast<std::size_t>(
            std::lower_bound(rows.begin(), rows.end(), face) - rows.begin());
        entries.emplace_back(static_cast<std::uint32_t>(position[p - 1][lex]),
                             (v % 2 == 0) ? 1 : -1);
      }
      std::sort(entries.begin(), entries.end());
      for (auto [r, s] : entries) {
        col.rows.push_back(r);
        col.values.push_back(s);
      }
    }
    const auto red = reduce_columns(columns, rows.size(), field, cleared.empty() ? nullptr : &cleared);
    const auto& e = f.entries(p);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (red.independent[i]) ++rank_at[p][e[order[p][i]]];
    std::partial_sum(rank_at[p].begin(), rank_at[p].end(), rank_at[p].begin());

    // A p-1 simplex that is the low of an independent column has a
    // dependent boundary column.
    cleared.assign(rows.size(), false);
    for (std::size_t i = 0; i < cols.size(); ++i)
      if (red.low[i] >= 0) cleared[static_cast<std::size_t>(red.low[i])] = true;
  }

  std::vector<std::vector<std::size_t>> betti(k_max + 1, std::vector<std::size_t>(q1, 0));
  for (std::size_t k = 0; k <= std::min(k_max, f.clique_dim()); ++k) {
    std::vector<std::size_t> count(q1, 0);
    for (auto e : f.entries(k)) ++count[e];
    std::partial_sum(count.begin(), count.end(), count.begin());
    for (std::size_t j = 0; j < q1; ++j) {
      const std::size_t r_k = (k >= 1) ? rank_at[k][j] : 0;
      const std::size_t r_k1 = (k + 1 <= top) ? rank_at[k + 1][j] : 0;
      betti[k][j] = count[j] - r_k - r_k1;
    }
  }
  return betti;
}

}  // namespace topoqk::tda
