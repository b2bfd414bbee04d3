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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "topoqk/random.hpp"
#include "topoqk/tda/geometry.hpp"

namespace topoqk::shapes {

enum class ShapeKind { triangle, sliced_quadrangle };

/// +1 for triangles, -1 for sliced quadrangles.
int label_of(ShapeKind kind);
std::string name_of(ShapeKind kind);
/// Inverse of name_of; throws InputError for unknown names.
ShapeKind kind_from_name(const std::string& name);

using Point2 = std::array<double, 2>;

struct Segment {
  Point2 a;
  Point2 b;
  double length() const;
};

/// Rotation by `rotation` radians followed by the shear [[1, tan sx], [tan sy, 1]].
struct Transform {
  double rotation = 0.0;
  double shear_x = 0.0;
  double shear_y = 0.0;

  Point2 apply(const Point2& p) const;
  /// Rotation in [0, 2 pi), shear angles in [0, pi / 4].
  static Transform random(Rng& rng);
};

struct Shape {
  ShapeKind kind;
  std::vector<Segment> segments;
  Transform transform;

  double perimeter() const;
};

/// Triangle on (0,0), (0,1), (1,1); or the unit square with the diagonal
/// (0,0)-(1,1); mapped through `transform`.
Shape make_shape(ShapeKind kind, const Transform& transform);
Shape make_shape(ShapeKind kind, Rng& rng);

/// `count` independent points uniform in arc length over all segments.
tda::PointCloud sample_perimeter(const Shape& shape, std::size_t count, Rng& rng);

}  // namespace topoqk::shapes
