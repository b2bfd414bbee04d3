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

#include "topoqk/shapes/experiments.hpp"

#include <cmath>
#include <optional>
#include <sstream>

#include "topoqk/errors.hpp"
#include "topoqk/kernel/curves.hpp"
#include "topoqk/lgz/estimator.hpp"
#include "topoqk/shapes/svm.hpp"
#include "topoqk/tda/filtration.hpp"

namespace topoqk::shapes {

namespace {

struct TopologicalData {
  std::vector<tda::Filtration> filtrations;
  std::vector<kernel::BettiCurveMatrix> curves;
};

TopologicalData topological_data(const Dataset& d, std::size_t k_max) {
  std::vector<tda::DistanceMatrix> dms;
  for (const auto& s : d.samples) dms.push_back(tda::distance_matrix(s.points));
  const auto grid = tda::threshold_sequence(dms);
  TopologicalData out;
  for (const auto& dm : dms) {
    out.filtrations.push_back(tda::vr_filtration(dm, grid, k_max));
    out.curves.push_back(kernel::exact_betti_curves(out.filtrations.back(), k_max));
  }
  return out;
}

kernel::GramMatrix topological_gram(const std::vector<kernel::BettiCurveMatrix>& curves,
                                    const kernel::KernelParams& params) {
  return kernel::gram_matrix(std::span<const kernel::BettiCurveMatrix>(curves),
                             [&](const auto& a, const auto& b) { return kernel::topo_kernel(a, b, params); });
}

double held_out_accuracy(const kernel::GramMatrix& gram, const std::vector<int>& labels, const Split& split,
                         double c, bool& converged) {
  const auto n_train = static_cast<Eigen::Index>(split.train.size());
  Eigen::MatrixXd k_train(n_train, n_train);
  std::vector<int> y_train;
  for (Eigen::Index a = 0; a < n_train; ++a) {
    y_train.push_back(labels[split.train[static_cast<std::size_t>(a)]]);
    for (Eigen::Index b = 0; b < n_train; ++b)
      k_train(a, b) = gram(static_cast<Eigen::Index>(split.train[static_cast<std::size_t>(a)]),
                           static_cast<Eigen::Index>(split.train[static_cast<std::size_t>(b)]));
  }
  SvmOptions opts;
  opts.c = c;
  const auto model = svm_train(k_train, y_train, opts);
  converged = model.converged;
  std::size_t correct = 0;
  std::vector<double> row(split.train.size());
  for (std::size_t t : split.test) {
    for (std::size_t a = 0; a < split.train.size(); ++a)
      row[a] = gram(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(split.train[a]));
    correct += svm_predict(model, row) == labels[t];
  }
  return static_cast<double>(correct) / static_cast<double>(split.test.size());
}

}  // namespace

std::string KernelSpec::name() const {
  switch (family) {
    case KernelFamily::topological: return "topological";
    case KernelFamily::rbf: return "rbf";
    case KernelFamily::laplacian: return "laplacian";
    case KernelFamily::polynomial: return "polynomial";
  }
  return "unknown";
}

KernelFamily family_from_name(const std::string& name) {
  if (name == "topological") return KernelFamily::topological;
  if (name == "rbf") return KernelFamily::rbf;
  if (name == "laplacian") return KernelFamily::laplacian;
  if (name == "polynomial") return KernelFamily::polynomial;
  throw InputError("unknown kernel '" + name + "'");
}

std::vector<KernelSpec> default_kernel_grid() {
  std::vector<KernelSpec> grid{{KernelFamily::topological, 1.0, 2.0}};
  for (auto family : {KernelFamily::rbf, KernelFamily::laplacian})
    for (double gamma : {1e-4, 1e-3, 1e-2, 1e-1, 1.0}) grid.push_back({family, gamma, 2.0});
  for (int d = 1; d <= 5; ++d) grid.push_back({KernelFamily::polynomial, static_cast<double>(d), 2.0});
  return grid;
}

void AccuracyConfig::validate() const {
  if (points.empty() || kernels.empty() || seeds.empty()) throw InputError("experiment grids must be nonempty");
  if (!(split_ratio > 0.0 && split_ratio < 1.0)) throw InputError("split ratio must be in (0, 1)");
  if (!(c > 0.0)) throw InputError("C must be positive");
  if (items == 0 || items % 2 != 0) throw InputError("item count must be even and positive");
  for (auto n : points)
    if (n < 3) throw InputError("point counts must be >= 3");
  for (const auto& k : kernels) {
    if (k.family == KernelFamily::polynomial) {
      if (!(k.hyper >= 1.0) || k.hyper != std::floor(k.hyper)) throw InputError("polynomial degree must be a positive integer");
    } else if (!(k.hyper > 0.0)) {
      throw InputError("kernel gamma must be positive");
    }
    if (k.family == KernelFamily::topological) kernel::KernelParams{k.hyper, k.p}.validate();
  }
}

std::vector<AccuracyRow> experiment_accuracy(const AccuracyConfig& cfg) {
  cfg.validate();
  std::vector<AccuracyRow> rows;
  for (std::uint64_t seed : cfg.seeds)
    for (std::size_t n : cfg.points) {
      const Dataset d = generate_dataset(cfg.items, n, seed);
      const auto labels = d.labels();
      const Split split = stratified_split(labels, cfg.split_ratio, seed);
      std::optional<TopologicalData> topo;
      std::vector<std::vector<double>> flat;
      for (const auto& s : d.samples) flat.push_back(s.points.flat());
      for (const auto& spec : cfg.kernels) {
        kernel::GramMatrix gram;
        if (spec.family == KernelFamily::topological) {
          if (!topo) topo = topological_data(d, cfg.k_max);
          gram = topological_gram(topo->curves, {spec.hyper, spec.p});
        } else {
          const auto kind = spec.family == KernelFamily::rbf         ? kernel::ConventionalKind::rbf
                            : spec.family == KernelFamily::laplacian ? kernel::ConventionalKind::laplacian
                                                                     : kernel::ConventionalKind::polynomial;
          gram = kernel::gram_matrix(std::span<const std::vector<double>>(flat), [&](const auto& a, const auto& b) {
            return kernel::conventional_kernel(a, b, kind, spec.hyper);
          });
        }
        AccuracyRow row;
        row.kernel = spec.name();
        row.hyper = spec.hyper;
        row.n_points = n;
        row.seed = seed;
        row.accuracy = held_out_accuracy(gram, labels, split, cfg.c, row.svm_converged);
        row.min_eigenvalue = kernel::psd_check(gram).min_eigenvalue;
        rows.push_back(row);
      }
    }
  return rows;
}

std::string method_name(qsim::EvolutionMethod method) {
  switch (method) {
    case qsim::EvolutionMethod::exact: return "exact";
    case qsim::EvolutionMethod::trotter: return "trotter";
    case qsim::EvolutionMethod::qdrift: return "qdrift";
  }
  return "unknown";
}

qsim::EvolutionMethod method_from_name(const std::string& name) {
  if (name == "exact") return qsim::EvolutionMethod::exact;
  if (name == "trotter") return qsim::EvolutionMethod::trotter;
  if (name == "qdrift") return qsim::EvolutionMethod::qdrift;
  throw InputError("unknown evolution method '" + name + "'");
}

void RmseConfig::validate() const {
  if (simulations.empty() || shots.empty() || seeds.empty()) throw InputError("experiment grids must be nonempty");
  if (items == 0 || items % 2 != 0) throw InputError("item count must be even and positive");
  if (points < 3) throw InputError("point count must be >= 3");
  if (ancillas < 1 || ancillas > 20) throw InputError("t must be in [1, 20]");
  for (const auto& s : simulations)
    if (s.repetitions < 1) throw InputError("repetitions must be >= 1");
  for (auto m : shots)
    if (m < 1) throw InputError("shot counts must be >= 1");
  params.validate();
}

RmseResult experiment_rmse(const RmseConfig& cfg, const std::function<void(const std::string&)>& progress) {
  cfg.validate();
  const Dataset d = generate_dataset(cfg.items, cfg.points, cfg.dataset_seed);
  const TopologicalData topo = topological_data(d, cfg.k_max);
  const auto exact = topological_gram(topo.curves, cfg.params);
  RmseResult result;
  result.exact_min_eigenvalue = kernel::psd_check(exact).min_eigenvalue;

  for (const auto& sim : cfg.simulations) {
    if (progress) {
      std::ostringstream msg;
      msg << method_name(sim.method) << " r=" << sim.repetitions;
      progress(msg.str());
    }
    lgz::LgzConfig base;
    base.ancillas = cfg.ancillas;
    base.evolution.method = sim.method;
    base.evolution.repetitions = sim.repetitions;
    base.evolution.qdrift_mode = cfg.qdrift_mode;
    base.zero_bin_half_width = cfg.zero_bin_half_width;
    const bool fixed = sim.method == qsim::EvolutionMethod::qdrift && cfg.qdrift_mode == qsim::QdriftMode::fixed_product;

    auto make_estimators = [&](std::uint64_t product_seed) {
      std::vector<kernel::LgzCurveEstimator> est;
      for (std::size_t i = 0; i < topo.filtrations.size(); ++i) {
        auto c = base;
        c.evolution.seed = derive_seed(product_seed, {tag("product"), i});
        est.emplace_back(topo.filtrations[i], cfg.k_max, c);
      }
      return est;
    };
    auto shared = make_estimators(cfg.dataset_seed);
    std::vector<kernel::BettiCurveMatrix> expected;
    for (auto& e : shared) expected.push_back(e.expected());
    result.expected_rmse.push_back(kernel::rmse(exact, topological_gram(expected, cfg.params)));

    for (std::uint64_t seed : cfg.seeds) {
      std::vector<kernel::LgzCurveEstimator> per_seed;
      if (fixed) per_seed = make_estimators(seed);
      auto& estimators = fixed ? per_seed : shared;
      for (std::int64_t shots : cfg.shots) {
        std::vector<kernel::BettiCurveMatrix> curves;
        for (std::size_t i = 0; i < estimators.size(); ++i)
          curves.push_back(estimators[i].estimate(shots, derive_seed(seed, {i, static_cast<std::uint64_t>(shots)})).curve);
        const auto gram = topological_gram(curves, cfg.params);
        RmseRow row;
        row.method = method_name(sim.method);
        row.repetitions = sim.repetitions;
        row.shots = shots;
        row.seed = seed;
        row.rmse = kernel::rmse(exact, gram);
        row.min_eigenvalue = kernel::psd_check(gram).min_eigenvalue;
        result.rows.push_back(row);
      }
    }
  }
  return result;
}

}  // namespace topoqk::shapes
