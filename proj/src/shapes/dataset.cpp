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

#include "topoqk/shapes/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "topoqk/errors.hpp"

namespace topoqk::shapes {

std::vector<int> Dataset::labels() const {
  std::vector<int> out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.label());
  return out;
}

Dataset generate_dataset(std::size_t items, std::size_t points, std::uint64_t seed) {
  if (items == 0 || items % 2 != 0) throw InputError("item count must be even and positive");
  if (points < 3) throw InputError("at least 3 points per shape are required");
  Dataset d;
  d.seed = seed;
  for (std::size_t i = 0; i < items; ++i) {
    const ShapeKind kind = i % 2 == 0 ? ShapeKind::triangle : ShapeKind::sliced_quadrangle;
    Rng shape_rng(derive_seed(seed, {tag("shape"), i}));
    const Shape shape = make_shape(kind, shape_rng);
    Rng point_rng(derive_seed(seed, {tag("points"), i, points}));
    d.samples.push_back({kind, sample_perimeter(shape, points, point_rng), shape.transform});
  }
  return d;
}

Split stratified_split(std::span<const int> labels, double ratio, std::uint64_t seed) {
  if (!(ratio > 0.0 && ratio < 1.0)) throw InputError("split ratio must be in (0, 1)");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  Split split;
  std::size_t train_per_class = 0, test_per_class = 0;
  bool first = true;
  for (auto& [label, idx] : by_class) {
    Rng rng(derive_seed(seed, {tag("split"), static_cast<std::uint64_t>(static_cast<std::int64_t>(label))}));
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[rng.below(i)]);
    const auto n_train = static_cast<std::size_t>(std::lround(ratio * static_cast<double>(idx.size())));
    const std::size_t n_test = idx.size() - n_train;
    if (first) {
      train_per_class = n_train;
      test_per_class = n_test;
      first = false;
    }
    if (n_train != train_per_class || n_test != test_per_class || n_train == 0 || n_test == 0)
      throw InputError("labels do not admit a balanced split at this ratio");
    split.train.insert(split.train.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_train));
    split.test.insert(split.test.end(), idx.begin() + static_cast<std::ptrdiff_t>(n_train), idx.end());
  }
  if (by_class.size() < 2) throw InputError("split needs at least two classes");
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

}  // namespace topoqk::shapes
