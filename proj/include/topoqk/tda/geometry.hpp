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
#include <span>
#include <vector>

namespace topoqk::tda {

/// Nonempty ordered set of points in R^d with finite coordinates.
class PointCloud {
 public:
  /// Throws InputError on an empty set, ragged dimensions or non-finite values.
  explicit PointCloud(const std::vector<std::vector<double>>& points);

  std::size_t size() const { return coords_.size() / dim_; }
  std::size_t dim() const { return dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  /// Row-major coordinates, points in insertion order.
  const std::vector<double>& flat() const { return coords_; }

 private:
  std::size_t dim_ = 0;
  std::vector<double> coords_;
};

/// Symmetric n x n matrix of pairwise Euclidean distances.
class DistanceMatrix {
 public:
  /// Validates symmetry, zero diagonal and non-negativity.
  DistanceMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  double max() const;

 private:
  std::size_t n_;
  std::vector<double> d_;
};

DistanceMatrix distance_matrix(const PointCloud& cloud);

/// Strictly increasing thresholds eps_0 = 0 < eps_1 < ... < eps_q.
class ThresholdSequence {
 public:
  explicit ThresholdSequence(std::vector<double> values);

  std::size_t size() const { return v_.size(); }
  double operator[](std::size_t j) const { return v_[j]; }
  const std::vector<double>& values() const { return v_; }
  /// Index of the first threshold >= value, or size() if none.
  std::size_t first_at_least(double value) const;

  friend bool operator==(const ThresholdSequence&, const ThresholdSequence&) = default;

 private:
  std::vector<double> v_;
};

/// Shared grid over a whole dataset: all strictly positive pairwise distances,
/// merged when within `tol` of the previously kept value, with 0 prepended.
ThresholdSequence threshold_sequence(std::span<const DistanceMatrix> matrices, double tol = 1e-9);

}  // namespace topoqk::tda
