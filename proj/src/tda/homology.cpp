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

#include "topoqk/tda/homology.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "topoqk/errors.hpp"

namespace topoqk::tda {

namespace {

struct Overflow {};

template <class T>
struct Ops;

template <>
struct Ops<long long> {
  static long long mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long long sub(long long a, long long b) {
    long long r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
  }
  static long long gcd(long long a, long long b) { return std::gcd(a, b); }
};

template <>
struct Ops<boost::multiprecision::cpp_int> {
  using T = boost::multiprecision::cpp_int;
  static T mul(const T& a, const T& b) { return a * b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
};

template <class T>
struct Column {
  std::vector<std::uint32_t> rows;
  std::vector<T> vals;
};

// col <- a*col - b*other, with a, b chosen to cancel the shared lowest row.
template <class T>
void eliminate(Column<T>& col, const Column<T>& other) {
  using O = Ops<T>;
  T a = other.vals.back();
  T b = col.vals.back();
  const T g = O::gcd(a, b);
  a /= g;
  b /= g;
  Column<T> out;
  out.rows.reserve(col.rows.size() + other.rows.size());
  out.vals.reserve(col.rows.size() + other.rows.size());
  std::size_t i = 0, j = 0;
  while (i < col.rows.size() || j < other.rows.size()) {
    T v;
    std::uint32_t r;
    if (j == other.rows.size() || (i < col.rows.size() && col.rows[i] < other.rows[j])) {
      r = col.rows[i];
      v = O::mul(a, col.vals[i++]);
    } else if (i == col.rows.size() || other.rows[j] < col.rows[i]) {
      r = other.rows[j];
      v = O::sub(T(0), O::mul(b, other.vals[j++]));
    } else {
      r = col.rows[i];
      v = O::sub(O::mul(a, col.vals[i++]), O::mul(b, other.vals[j++]));
    }
    if (v != 0) {
      out.rows.push_back(r);
      out.vals.push_back(std::move(v));
    }
  }
  if (!out.vals.empty()) {
    T g2 = out.vals.front() < 0 ? T(-out.vals.front()) : out.vals.front();
    for (const auto& v : out.vals) {
      if (g2 == 1) break;
      g2 = O::gcd(g2, v < 0 ? T(-v) : v);
    }
    if (g2 > 1)
      for (auto& v : out.vals) v /= g2;
  }
  col = std::move(out);
}

template <class T>
ColumnReduction reduce_integer(std::span<const SparseColumn> columns, std::size_t rows,
                               const std::vector<bool>* skip) {
  ColumnReduction out{std::vector<bool>(columns.size(), false),
                      std::vector<std::int64_t>(columns.size(), -1)};
  std::vector<std::int64_t> owner(rows, -1);
  std::vector<Column<T>> reduced(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (skip && (*skip)[c]) continue;
    Column<T> col;
    col.rows = columns[c].rows;
    col.vals.assign(columns[c].values.begin(), columns[c].values.end());
    while (!col.rows.empty()) {
      const std::int64_t o = owner[col.rows.back()];
      if (o < 0) break;
      eliminate(col, reduced[static_cast<std::size_t>(o)]);
    }
    if (!col.rows.empty()) {
      owner[col.rows.back()] = static_cast<std::int64_t>(c);
      out.independent[c] = true;
      out.low[c] = col.rows.back();
      reduced[c] = std::move(col);
    }
  }
  return out;
}

ColumnReduction reduce_gf2(std::span<const SparseColumn> columns, std::size_t rows,
                           const std::vector<bool>* skip) {
  ColumnReduction out{std::vector<bool>(columns.size(), false),
                      std::vector<std::int64_t>(columns.size(), -1)};
  std::vector<std::int64_t> owner(rows, -1);
  std::vector<std::vector<std::uint32_t>> reduced(columns.size());
  std::vector<std::uint32_t> tmp;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (skip && (*skip)[c]) continue;
    std::vector<std::uint32_t> col;
    for (std::size_t i = 0; i < columns[c].rows.size(); ++i)
      if (columns[c].values[i] % 2 != 0) col.push_back(columns[c].rows[i]);
    while (!col.empty()) {
      const std::int64_t o = owner[col.back()];
      if (o < 0) break;
      const auto& other = reduced[static_cast<std::size_t>(o)];
      tmp.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(),
                                    std::back_inserter(tmp));
      col.swap(tmp);
    }
    if (!col.empty()) {
      owner[col.back()] = static_cast<std::int64_t>(c);
      out.independent[c] = true;
      out.low[c] = col.back();
      reduced[c] = std::move(col);
    }
  }
  return out;
}

}  // namespace

ColumnReduction reduce_columns(std::span<const SparseColumn> columns, std::size_t rows,
                               Field field, const std::vector<bool>* skip) {
  if (field == Field::gf2) return reduce_gf2(columns, rows, skip);
  try {
    return reduce_integer<long long>(columns, rows, skip);
  } catch (const Overflow&) {
    return reduce_integer<boost::multiprecision::cpp_int>(columns, rows, skip);
  }
}

std::size_t rank(const BoundaryMatrix& b, Field field) {
  std::vector<SparseColumn> cols(b.cols);
  for (std::size_t c = 0; c < b.cols; ++c) {
    for (const auto& e : b.columns[c]) {
      cols[c].rows.push_back(e.row);
      cols[c].values.push_back(e.sign);
    }
  }
  auto red = reduce_columns(cols, b.rows, field);
  return static_cast<std::size_t>(std::count(red.independent.begin(), red.independent.end(), true));
}

BettiNumber betti_exact(const SimplicialComplex& s, std::size_t k, Field field) {
  BettiNumber out;
  const std::size_t dim_k = s.count(k);
  if (static_cast<int>(k + 1) > s.max_dim()) out.upper_truncated = s.clique_truncated();
  if (dim_k == 0) return out;
  const std::size_t rank_k = (k >= 1) ? rank(boundary_matrix(s, k), field) : 0;
  std::size_t rank_k1 = 0;
  if (static_cast<int>(k + 1) <= s.max_dim()) {
    rank_k1 = rank(boundary_matrix(s, k + 1), field);
  }
  out.value = dim_k - rank_k - rank_k1;
  return out;
}

}  // namespace topoqk::tda
