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

#include "topoqk/tda/complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "topoqk/errors.hpp"

namespace topoqk::tda {

VertexMask to_mask(const Simplex& s) {
  VertexMask m = 0;
  for (auto v : s) {
    if (v >= kMaxGraphVertices) throw InputError("vertex index exceeds bitmask width");
    m |= VertexMask{1} << v;
  }
  return m;
}

Simplex to_simplex(VertexMask m) {
  Simplex s;
  s.reserve(static_cast<std::size_t>(std::popcount(m)));
  while (m != 0) {
    s.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
    m &= m - 1;
  }
  return s;
}

SimplicialComplex::SimplicialComplex(std::size_t num_vertices,
                                     std::vector<std::vector<Simplex>> by_dim,
                                     bool clique_truncated)
    : n_(num_vertices), by_dim_(std::move(by_dim)), clique_truncated_(clique_truncated) {
  for (std::size_t p = 0; p < by_dim_.size(); ++p) {
    const auto& list = by_dim_[p];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& s = list[i];
      if (s.size() != p + 1)
        throw StructuralError("simplex stored at the wrong dimension " + std::to_string(p));
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (s[a] >= n_) throw StructuralError("simplex vertex out of range");
        if (a > 0 && s[a] <= s[a - 1]) throw StructuralError("simplex vertices must be sorted");
      }
      if (i > 0 && !(list[i - 1] < s))
        throw StructuralError("simplex list must be sorted and duplicate-free");
      if (p == 0) continue;
      Simplex face(p);
      for (std::size_t j = 0; j <= p; ++j) {
        std::copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j), face.begin());
        std::copy(s.begin() + static_cast<std::ptrdiff_t>(j) + 1, s.end(),
                  face.begin() + static_cast<std::ptrdiff_t>(j));
        if (!std::binary_search(by_dim_[p - 1].begin(), by_dim_[p - 1].end(), face))
          throw StructuralError("complex is not closed under faces");
      }
    }
  }
}

SimplicialComplex SimplicialComplex::closure_of(std::size_t num_vertices,
                                                std::vector<Simplex> generators) {
  std::vector<std::set<Simplex>> sets;
  for (auto& g : generators) {
    std::sort(g.begin(), g.end());
    if (g.empty()) continue;
    const std::size_t k = g.size();
    if (sets.size() < k) sets.resize(k);
    // Every nonempty subset of g.
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
      Simplex face;
      for (std::size_t i = 0; i < k; ++i)
        if ((bits >> i) & 1U) face.push_back(g[i]);
      sets[face.size() - 1].insert(face);
    }
  }
  std::vector<std::vector<Simplex>> by_dim;
  for (auto& s : sets) by_dim.emplace_back(s.begin(), s.end());
  return SimplicialComplex(num_vertices, std::move(by_dim));
}

const std::vector<Simplex>& SimplicialComplex::simplices(std::size_t p) const {
  static const std::vector<Simplex> kEmpty;
  return p < by_dim_.size() ? by_dim_[p] : kEmpty;
}

std::size_t SimplicialComplex::count(std::size_t p) const { return simplices(p).size(); }

std::size_t SimplicialComplex::total_count() const {
  std::size_t c = 0;
  for (const auto& l : by_dim_) c += l.size();
  return c;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty()) return std::nullopt;
  const auto& list = simplices(s.size() - 1);
  auto it = std::lower_bound(list.begin(), list.end(), s);
  if (it == list.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

SimplicialComplex build_complex(const std::vector<CliqueSet>& cliques) {
  if (cliques.empty()) throw InputError("no clique sets given");
  const std::size_t n = cliques.front().num_vertices;
  std::vector<std::vector<Simplex>> by_dim(cliques.size());
  for (std::size_t k = 0; k < cliques.size(); ++k) {
    if (cliques[k].order != k) throw StructuralError("clique sets must be ordered by order");
    for (VertexMask m : cliques[k].members) {
      if (static_cast<std::size_t>(std::popcount(m)) != k + 1)
        throw StructuralError("clique has the wrong Hamming weight");
      if (k > 0) {
        for (VertexMask rest = m; rest != 0; rest &= rest - 1) {
          const VertexMask facet = m & ~(rest & (~rest + 1));
          if (!cliques[k - 1].contains(facet))
            throw StructuralError("clique family is not downward closed");
        }
      }
      by_dim[k].push_back(to_simplex(m));
    }
    std::sort(by_dim[k].begin(), by_dim[k].end());
  }
  const bool truncated = !by_dim.back().empty() && cliques.size() < n;
  return SimplicialComplex(n, std::move(by_dim), truncated);
}

Eigen::MatrixXd BoundaryMatrix::dense() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows),
                                            static_cast<Eigen::Index>(cols));
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& e : columns[c]) m(e.row, static_cast<Eigen::Index>(c)) = e.sign;
  return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& s, std::size_t p) {
  if (p < 1 || static_cast<int>(p) > s.max_dim())
    throw InputError("boundary dimension " + std::to_string(p) + " outside [1, " +
                     std::to_string(s.max_dim()) + "]");
  const auto& cols = s.simplices(p);
  const auto& rows = s.simplices(p - 1);
  BoundaryMatrix b;
  b.p = p;
  b.rows = rows.size();
  b.cols = cols.size();
  b.columns.resize(cols.size());
  Simplex face(p);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const auto& sigma = cols[c];
    auto& col = b.columns[c];
    for (std::size_t j = 0; j <= p; ++j) {
      std::copy(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(j), face.begin());
      std::copy(sigma.begin() + static_cast<std::ptrdiff_t>(j) + 1, sigma.end(),
                face.begin() + static_cast<std::ptrdiff_t>(j));
      auto it = std::lower_bound(rows.begin(), rows.end(), face);
      col.push_back({static_cast<std::uint32_t>(it - rows.begin()), (j % 2 == 0) ? 1 : -1});
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.row < b.row; });
  }
  return b;
}

long euler_characteristic(const SimplicialComplex& s) {
  long chi = 0;
  for (int p = 0; p <= s.max_dim(); ++p) {
    const long c = static_cast<long>(s.count(static_cast<std::size_t>(p)));
    chi += (p % 2 == 0) ? c : -c;
  }
  return chi;
}

}  // namespace topoqk::tda
