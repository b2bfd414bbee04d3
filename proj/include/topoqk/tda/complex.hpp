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
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "topoqk/tda/graph.hpp"

namespace topoqk::tda {

/// Sorted vertex tuple; dimension is size() - 1.
using Simplex = std::vector<std::uint32_t>;

VertexMask to_mask(const Simplex& s);
Simplex to_simplex(VertexMask m);

/// Downward-closed family of simplices stored per dimension in lexicographic
/// order. The order fixes row/column indexing of boundary matrices.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Throws StructuralError unless every list is sorted, duplicate-free and
  /// every facet of a stored simplex is stored.
  SimplicialComplex(std::size_t num_vertices, std::vector<std::vector<Simplex>> by_dim,
                    bool clique_truncated = false);

  /// Smallest complex containing the given simplices (vertices sorted on input).
  static SimplicialComplex closure_of(std::size_t num_vertices, std::vector<Simplex> generators);

  std::size_t num_vertices() const { return n_; }
  /// Largest stored dimension (lists may be empty); -1 for a complex with no lists.
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Simplex>& simplices(std::size_t p) const;
  std::size_t count(std::size_t p) const;
  std::size_t total_count() const;
  std::optional<std::size_t> index_of(const Simplex& s) const;
  /// True when built from a clique enumeration that stopped below the clique
  /// number of the source graph, so higher simplices may be missing.
  bool clique_truncated() const { return clique_truncated_; }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<Simplex>> by_dim_;
  bool clique_truncated_ = false;
};

/// Clique complex from a downward-closed list of clique sets (orders 0..k).
SimplicialComplex build_complex(const std::vector<CliqueSet>& cliques);

/// Signed boundary map C_p -> C_{p-1}, stored column-sparse.
struct BoundaryMatrix {
  struct Entry {
    std::uint32_t row;
    int sign;
  };
  std::size_t p = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Per column, entries sorted by row.
  std::vector<std::vector<Entry>> columns;

  Eigen::MatrixXd dense() const;
};

/// Column of sigma = {v_0 < ... < v_p} carries (-1)^j at the face omitting v_j.
BoundaryMatrix boundary_matrix(const SimplicialComplex& s, std::size_t p);

long euler_characteristic(const SimplicialComplex& s);

}  // namespace topoqk::tda
