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

#include "topoqk/shapes/shapes.hpp"
#include "topoqk/tda/geometry.hpp"

namespace topoqk::shapes {

struct ShapeSample {
  ShapeKind kind;
  tda::PointCloud points;
  Transform transform;

  int label() const { return label_of(kind); }
};

struct Dataset {
  std::uint64_t seed = 0;
  std::vector<ShapeSample> samples;

  std::vector<int> labels() const;
};

/// Alternating triangles and sliced quadrangles. Transforms depend only on
/// (seed, index), so datasets of different point counts share shapes;
/// points are drawn from (seed, index, count).
Dataset generate_dataset(std::size_t items, std::size_t points, std::uint64_t seed);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Per class, a seeded shuffle puts round(ratio * class size) items in
/// train. Throws InputError unless both parts get equal nonzero class counts.
Split stratified_split(std::span<const int> labels, double ratio, std::uint64_t seed);

}  // namespace topoqk::shapes
