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

#include "topoqk/shapes/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "topoqk/errors.hpp"

namespace topoqk::shapes {

int label_of(ShapeKind kind) { return kind == ShapeKind::triangle ? 1 : -1; }

std::string name_of(ShapeKind kind) { return kind == ShapeKind::triangle ? "triangle" : "sliced_quadrangle"; }

ShapeKind kind_from_name(const std::string& name) {
  if (name == "triangle") return ShapeKind::triangle;
  if (name == "sliced_quadrangle") return ShapeKind::sliced_quadrangle;
  throw InputError("unknown shape '" + name + "'");
}

double Segment::length() const { return std::hypot(b[0] - a[0], b[1] - a[1]); }

Point2 Transform::apply(const Point2& p) const {
  const double c = std::cos(rotation), s = std::sin(rotation);
  const double rx = c * p[0] - s * p[1], ry = s * p[0] + c * p[1];
  return {rx + std::tan(shear_x) * ry, std::tan(shear_y) * rx + ry};
}

Transform Transform::random(Rng& rng) {
  Transform t;
  t.rotation = rng.uniform(0.0, 2 * std::numbers::pi);
  t.shear_x = rng.uniform(0.0, std::numbers::pi / 4);
  t.shear_y = rng.uniform(0.0, std::numbers::pi / 4);
  return t;
}

double Shape::perimeter() const {
  double s = 0.0;
  for (const auto& seg : segments) s += seg.length();
  return s;
}

Shape make_shape(ShapeKind kind, const Transform& transform) {
  std::vector<std::pair<Point2, Point2>> base;
  if (kind == ShapeKind::triangle) {
    base = {{{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 0}}};
  } else {
    base = {{{0, 0}, {0, 1}}, {{0, 1}, {1, 1}}, {{1, 1}, {1, 0}}, {{1, 0}, {0, 0}}, {{0, 0}, {1, 1}}};
  }
  Shape shape{kind, {}, transform};
  for (const auto& [a, b] : base) shape.segments.push_back({transform.apply(a), transform.apply(b)});
  return shape;
}

Shape make_shape(ShapeKind kind, Rng& rng) { return make_shape(kind, Transform::random(rng)); }

tda::PointCloud sample_perimeter(const Shape& shape, std::size_t count, Rng& rng) {
  if (count < 3) throw InputError("at least 3 perimeter points are required");
  std::vector<double> cumulative;
  double total = 0.0;
  for (const auto& seg : shape.segments) cumulative.push_back(total += seg.length());
  std::vector<std::vector<double>> pts;
  pts.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = rng.uniform() * total;
    const auto idx = std::min<std::size_t>(
        static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin()),
        shape.segments.size() - 1);
    const auto& seg = shape.segments[idx];
    const double start = idx == 0 ? 0.0 : cumulative[idx - 1];
    const double t = std::clamp((u - start) / seg.length(), 0.0, 1.0);
    pts.push_back({seg.a[0] + t * (seg.b[0] - seg.a[0]), seg.a[1] + t * (seg.b[1] - seg.a[1])});
  }
  return tda::PointCloud(std::move(pts));
}

}  // namespace topoqk::shapes
