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
#include <span>
#include <vector>

#include "topoqk/tda/complex.hpp"

namespace topoqk::tda {

/// Coefficient field for ranks. Rational ranks use fraction-free integer
/// elimination and give the real Betti numbers, i.e. dim ker of the Hodge
/// Laplacian. GF(2) is offered as an alternative backend.
enum class Field { rational, gf2 };

/// Sparse integer column, entries sorted by row.
struct SparseColumn {
  std::vector<std::uint32_t> rows;
  std::vector<int> values;
};

struct ColumnReduction {
  /// independent[c] iff column c is not in the span of columns 0..c-1, so
  /// prefix sums give the ranks of column prefixes.
  std::vector<bool> independent;
  /// Lowest nonzero row of each reduced independent column, -1 otherwise.
  std::vector<std::int64_t> low;
};

/// Left-to-right column reduction. `skip` marks columns already known to be
/// dependent; they are reported as such without being reduced.
ColumnReduction reduce_columns(std::span<const SparseColumn> columns, std::size_t rows,
                               Field field, const std::vector<bool>* skip = nullptr);

std::size_t rank(const BoundaryMatrix& b, Field field = Field::rational);

struct BettiNumber {
  std::size_t value = 0;
  /// The complex stops below dimension k+1 although higher cliques exist,
  /// so the value may overestimate the true Betti number.
  bool upper_truncated = false;
};

/// beta_k = dim C_k - rank d_k - rank d_{k+1}.
BettiNumber betti_exact(const SimplicialComplex& s, std::size_t k, Field field = Field::rational);

}  // namespace topoqk::tda
