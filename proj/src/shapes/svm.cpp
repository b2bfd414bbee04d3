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

#include "topoqk/shapes/svm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "topoqk/errors.hpp"

namespace topoqk::shapes {

namespace {

constexpr double kTau = 1e-12;

}  // namespace

double SvmModel::decision(std::span<const double> kernel_row) const {
  if (kernel_row.size() != alphas.size()) throw InputError("kernel row length differs from training size");
  double f = bias;
  for (std::size_t i = 0; i < alphas.size(); ++i) f += alphas[i] * labels[i] * kernel_row[i];
  return f;
}

int svm_predict(const SvmModel& model, std::span<const double> kernel_row) {
  return model.decision(kernel_row) >= 0.0 ? 1 : -1;
}

double dual_objective(const Eigen::MatrixXd& gram, std::span<const int> labels, std::span<const double> alphas) {
  const auto m = static_cast<Eigen::Index>(alphas.size());
  double lin = 0.0, quad = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) {
    lin += alphas[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < m; ++j)
      quad += alphas[static_cast<std::size_t>(i)] * alphas[static_cast<std::size_t>(j)] *
              labels[static_cast<std::size_t>(i)] * labels[static_cast<std::size_t>(j)] * gram(i, j);
  }
  return lin - 0.5 * quad;
}

SvmModel svm_train(const Eigen::MatrixXd& gram, std::span<const int> labels, const SvmOptions& opts) {
  const auto m = labels.size();
  if (gram.rows() != static_cast<Eigen::Index>(m) || gram.cols() != static_cast<Eigen::Index>(m))
    throw InputError("Gram matrix shape does not match label count");
  if (m == 0) throw InputError("training set is empty");
  if (!(opts.c > 0.0) || !(opts.tol > 0.0) || opts.max_iter < 1) throw InputError("invalid SVM options");
  for (int y : labels)
    if (y != 1 && y != -1) throw InputError("labels must be +1 or -1");
  if ((gram - gram.transpose()).cwiseAbs().maxCoeff() > 1e-9) throw InputError("Gram matrix is not symmetric");

  const double c = opts.c;
  std::vector<double> a(m, 0.0);
  // Gradient of 1/2 a^T Q a - sum(a).
  std::vector<double> g(m, -1.0);
  auto y = [&](std::size_t i) { return static_cast<double>(labels[i]); };
  auto q = [&](std::size_t i, std::size_t j) {
    return y(i) * y(j) * gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  };
  auto in_up = [&](std::size_t t) { return (labels[t] == 1 && a[t] < c) || (labels[t] == -1 && a[t] > 0); };
  auto in_low = [&](std::size_t t) { return (labels[t] == 1 && a[t] > 0) || (labels[t] == -1 && a[t] < c); };

  SvmModel model;
  model.c = c;
  model.labels.assign(labels.begin(), labels.end());
  long iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    double g_max = -std::numeric_limits<double>::infinity();
    std::size_t i = m;
    for (std::size_t t = 0; t < m; ++t)
      if (in_up(t) && -y(t) * g[t] >= g_max) {
        g_max = -y(t) * g[t];
        i = t;
      }
    double g_min = std::numeric_limits<double>::infinity();
    double best = std::numeric_limits<double>::infinity();
    std::size_t j = m;
    for (std::size_t t = 0; t < m; ++t) {
      if (!in_low(t)) continue;
      const double v = -y(t) * g[t];
      g_min = std::min(g_min, v);
      if (i == m || v >= g_max) continue;
      const double b = g_max - v;
      double curv = q(i, i) + q(t, t) - 2.0 * y(i) * y(t) * q(i, t);
      if (curv <= 0) curv = kTau;
      if (-(b * b) / curv <= best) {
        best = -(b * b) / curv;
        j = t;
      }
    }
    if (i == m || j == m || g_max - g_min < opts.tol) {
      model.converged = true;
      break;
    }
    // Two-variable subproblem along y_i d_i + y_j d_j = 0.
    const double old_i = a[i], old_j = a[j];
    double curv = q(i, i) + q(j, j) - 2.0 * y(i) * y(j) * q(i, j);
    if (curv <= 0) curv = kTau;
    if (labels[i] != labels[j]) {
      const double delta = (-g[i] - g[j]) / curv;
      const double diff = a[i] - a[j];
      a[i] += delta;
      a[j] += delta;
      if (diff > 0) {
        if (a[j] < 0) { a[j] = 0; a[i] = diff; }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = -diff;
      }
      if (diff > 0) {
        if (a[i] > c) { a[i] = c; a[j] = c - diff; }
      } else if (a[j] > c) {
        a[j] = c;
        a[i] = c + diff;
      }
    } else {
      const double delta = (g[i] - g[j]) / curv;
      const double sum = a[i] + a[j];
      a[i] -= delta;
      a[j] += delta;
      if (sum > c) {
        if (a[i] > c) { a[i] = c; a[j] = sum - c; }
      } else if (a[j] < 0) {
        a[j] = 0;
        a[i] = sum;
      }
      if (sum > c) {
        if (a[j] > c) { a[j] = c; a[i] = sum - c; }
      } else if (a[i] < 0) {
        a[i] = 0;
        a[j] = sum;
      }
    }
    const double di = a[i] - old_i, dj = a[j] - old_j;
    for (std::size_t t = 0; t < m; ++t) g[t] += q(t, i) * di + q(t, j) * dj;
  }
  model.iterations = iter;

  // Bias from free vectors, or the midpoint of the feasible interval.
  double sum = 0.0, ub = std::numeric_limits<double>::infinity(), lb = -ub;
  std::size_t free = 0;
  for (std::size_t t = 0; t < m; ++t) {
    const double yg = y(t) * g[t];
    if (a[t] > 0 && a[t] < c) {
      sum += yg;
      ++free;
    } else if ((a[t] >= c && labels[t] == -1) || (a[t] <= 0 && labels[t] == 1)) {
      ub = std::min(ub, yg);
    } else {
      lb = std::max(lb, yg);
    }
  }
  double rho;
  if (free > 0)
    rho = sum / static_cast<double>(free);
  else if (std::isfinite(ub) && std::isfinite(lb))
    rho = (ub + lb) / 2;
  else
    rho = std::isfinite(ub) ? ub : (std::isfinite(lb) ? lb : 0.0);
  model.bias = -rho;
  model.alphas = std::move(a);
  for (std::size_t t = 0; t < m; ++t)
    if (model.alphas[t] > 0) model.support.push_back(t);
  return model;
}

}  // namespace topoqk::shapes
