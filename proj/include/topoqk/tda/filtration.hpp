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
#include <vector>

#include "topoqk/tda/complex.hpp"
#include "topoqk/tda/geometry.hpp"
#include "topoqk/tda/graph.hpp"
#include "topoqk/tda/homology.hpp"

namespace topoqk::tda {

/// Nested Vietoris-Rips complexes S_0 <= ... <= S_q over a threshold grid.
///
/// Stored compactly as the largest complex with, per simplex, the index of
/// the first threshold at which it enters; `complex_at(j)` materializes S_j.
/// Grids shared across a dataset can be much longer than the number of
/// distinct complexes of any single cloud, so complexes are not stored.
class Filtration {
 public:
  Filtration(ThresholdSequence thresholds, DistanceMatrix distances, std::size_t clique_dim,
             std::vector<std::vector<Simplex>> simplices,
             std::vector<std::vector<std::uint32_t>> entries);

  const ThresholdSequence& thresholds() const { return thresholds_; }
  const DistanceMatrix& distances() const { return distances_; }
  /// Number of complexes (q + 1).
  std::size_t size() const { return thresholds_.size(); }
  std::size_t num_vertices() const { return distances_.size(); }
  /// Largest simplex dimension enumerated.
  std::size_t clique_dim() const { return clique_dim_; }

  /// Simplices of dimension p in lexicographic order, with entry indices.
  const std::vector<Simplex>& simplices(std::size_t p) const { return simplices_[p]; }
  const std::vector<std::uint32_t>& entries(std::size_t p) const { return entries_[p]; }

  SimplicialComplex complex_at(std::size_t j) const;
  SkeletonGraph skeleton_at(std::size_t j) const;
  /// Number of edges of S_j. Two indices carry the same complex iff their
  /// edge counts agree, since clique complexes are determined by edges.
  std::size_t edge_count_at(std::size_t j) const;

 private:
  ThresholdSequence thresholds_;
  DistanceMatrix distances_;
  std::size_t clique_dim_;
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::uint32_t>> entries_;
  std::vector<std::size_t> edges_at_;
};

/// Enumerates cliques up to simplex dimension k_max + 1 (capped at n - 1) so
/// that beta_{k_max} is never truncated.
Filtration vr_filtration(const DistanceMatrix& dm, const ThresholdSequence& thresholds,
                         std::size_t k_max);

/// betti[k][j] = beta_k(S_j) for k <= k_max, from one left-to-right reduction
/// per dimension in entry order (prefix ranks), with clearing.
std::vector<std::vector<std::size_t>> filtration_betti_numbers(const Filtration& f,
                                                               std::size_t k_max,
                                                               Field field = Field::rational);

}  // namespace topoqk::tda
