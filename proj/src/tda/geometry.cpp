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

#include "topoqk/tda/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "topoqk/errors.hpp"

namespace topoqk::tda {

PointCloud::PointCloud(const std::vector<std::vector<double>>& points) {
  if (points.empty()) throw InputError("point cloud must be nonempty");
  dim_ = points.front().size();
  if (dim_ == 0) throw InputError("points must have dimension >= 1");
  coords_.reserve(points.size() * dim_);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim_)
      throw InputError("point " + std::to_string(i) + " has dimension " +
                       std::to_string(points[i].size()) + ", expected " + std::to_string(dim_));
    for (double x : points[i]) {
      if (!std::isfinite(x))
        throw InputError("point " + std::to_string(i) + " has a non-finite coordinate");
      coords_.push_back(x);
    }
  }
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
  if (d_.size() != n_ * n_) throw InputError("distance matrix entry count mismatch");
  for (std::size_t i = 0; i < n_; ++i) {
    if (d_[i * n_ + i] != 0.0) throw InputError("distance matrix diagonal must be zero");
    for (std::size_t j = 0; j < n_; ++j) {
      const double v = d_[i * n_ + j];
      if (!std::isfinite(v) || v < 0.0) throw InputError("distances must be finite and >= 0");
      if (v != d_[j * n_ + i]) throw InputError("distance matrix must be symmetric");
    }
  }
}

double DistanceMatrix::max() const {
  return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix distance_matrix(const PointCloud& cloud) {
  const std::size_t n = cloud.size();
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto a = cloud.point(i);
      auto b = cloud.point(j);
      double s = 0.0;
      for (std::size_t c = 0; c < cloud.dim(); ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
      d[i * n + j] = d[j * n + i] = std::sqrt(s);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

ThresholdSequence::ThresholdSequence(std::vector<double> values) : v_(std::move(values)) {
  if (v_.empty() || v_.front() != 0.0) throw InputError("threshold sequence must start at 0");
  for (std::size_t j = 1; j < v_.size(); ++j) {
    if (!std::isfinite(v_[j]) || !(v_[j] > v_[j - 1]))
      throw InputError("threshold sequence must be finite and strictly increasing");
  }
}

std::size_t ThresholdSequence::first_at_least(double value) const {
  return static_cast<std::size_t>(std::lower_bound(v_.begin(), v_.end(), value) - v_.begin());
}

ThresholdSequence threshold_sequence(std::span<const DistanceMatrix> matrices, double tol) {
  if (!(tol > 0.0)) throw InputError("threshold tolerance must be positive");
  std::vector<double> all;
  for (const auto& dm : matrices)
    for (std::size_t i = 0; i < dm.size(); ++i)
      for (std::size_t j = i + 1; j < dm.size(); ++j)
        if (dm(i, j) > 0.0) all.push_back(dm(i, j));
  std::sort(all.begin(), all.end());

  std::vector<double> out{0.0};
  for (double v : all) {
    if (v - out.back() > tol) out.push_back(v);
  }
  return ThresholdSequence(std::move(out));
}

}  // namespace topoqk::tda
