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

// Command-line driver: dataset generation, Betti curves, Gram matrices and
// the two experiment sweeps.
//
// Exit status: 0 success, 1 usage error, 2 runtime or resource error.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/io.hpp"
#include "topoqk/errors.hpp"
#include "topoqk/kernel/curves.hpp"
#include "topoqk/kernel/kernels.hpp"
#include "topoqk/lgz/dirac.hpp"
#include "topoqk/lgz/estimator.hpp"
#include "topoqk/shapes/dataset.hpp"
#include "topoqk/shapes/experiments.hpp"
#include "topoqk/tda/filtration.hpp"

namespace {

using namespace topoqk;
using nlohmann::json;

/// Invalid flag values, reported with exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename F>
auto checked(F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    throw UsageError(e.what());
  }
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-")
    std::cout << text;
  else
    cli::write_text(out, text);
}

std::pair<std::string, double> split_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("expected NAME:VALUE, got '" + spec + "'");
  try {
    std::size_t used = 0;
    const double v = std::stod(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument(spec);
    return {spec.substr(0, colon), v};
  } catch (const std::logic_error&) {
    throw InputError("bad numeric value in '" + spec + "'");
  }
}

qsim::QdriftMode qdrift_mode_from_name(const std::string& name) {
  if (name == "per_shot") return qsim::QdriftMode::per_shot;
  if (name == "fixed_product") return qsim::QdriftMode::fixed_product;
  throw InputError("unknown qdrift mode '" + name + "'");
}

std::string qdrift_mode_name(qsim::QdriftMode m) { return m == qsim::QdriftMode::per_shot ? "per_shot" : "fixed_product"; }

// ---------------------------------------------------------------- dataset

struct DatasetArgs {
  std::size_t items = 100;
  std::size_t points = 20;
  std::uint64_t seed = 0;
  std::string out;
};

void run_dataset(const DatasetArgs& a) {
  const auto d = checked([&] { return shapes::generate_dataset(a.items, a.points, a.seed); });
  emit(a.out, cli::dataset_to_json(d).dump() + "\n");
}

// ---------------------------------------------------------------- betti

struct BettiArgs {
  std::string dataset;
  std::string out;
  std::size_t k_max = 2;
  std::string backend = "exact";
  int t = 6;
  std::int64_t shots = 1000;
  std::string method = "exact";
  int reps = 1;
  std::uint64_t seed = 0;
  std::string qdrift_mode = "per_shot";
  int zero_bin = 0;
};

void run_betti(const BettiArgs& a) {
  lgz::LgzConfig cfg;
  checked([&] {
    if (a.backend != "exact" && a.backend != "lgz") throw InputError("backend must be exact or lgz");
    cfg.ancillas = a.t;
    cfg.shots = a.shots;
    cfg.evolution.method = shapes::method_from_name(a.method);
    cfg.evolution.repetitions = a.reps;
    cfg.evolution.qdrift_mode = qdrift_mode_from_name(a.qdrift_mode);
    cfg.zero_bin_half_width = a.zero_bin;
    lgz::validate(cfg);
    return 0;
  });
  const auto d = cli::dataset_from_json(cli::read_json(a.dataset));
  std::vector<tda::DistanceMatrix> dms;
  for (const auto& s : d.samples) {
    if (a.backend == "lgz" && s.points.size() > lgz::kMaxDiracQubits)
      throw ResourceError("lgz backend supports at most " + std::to_string(lgz::kMaxDiracQubits) +
                          " points per sample (one qubit per point); sample has " + std::to_string(s.points.size()));
    dms.push_back(tda::distance_matrix(s.points));
  }
  const auto grid = tda::threshold_sequence(dms);
  cli::CurveFile file{a.backend, a.k_max, {}};
  for (std::size_t i = 0; i < dms.size(); ++i) {
    const auto f = tda::vr_filtration(dms[i], grid, a.k_max);
    if (a.backend == "exact") {
      file.samples.push_back({kernel::exact_betti_curves(f, a.k_max), {}});
    } else {
      auto c = cfg;
      c.evolution.seed = derive_seed(a.seed, {tag("product"), i});
      kernel::LgzCurveEstimator est(f, a.k_max, c);
      auto detail = est.estimate(a.shots, derive_seed(a.seed, {i}));
      file.samples.push_back({detail.curve, detail});
    }
  }
  emit(a.out, cli::curves_to_json(file).dump() + "\n");
}

// ---------------------------------------------------------------- kernel gram

struct GramArgs {
  std::string curves;
  std::string dataset;
  std::string kernel = "topological";
  double gamma = 1.0;
  double p = 2.0;
  int degree = 2;
  std::string out;
};

void run_gram(const GramArgs& a) {
  const auto family = checked([&] {
    const auto f = shapes::family_from_name(a.kernel);
    if (f == shapes::KernelFamily::topological) {
      if (a.curves.empty()) throw InputError("topological kernel needs --curves");
      kernel::KernelParams{a.gamma, a.p}.validate();
    } else {
      if (a.dataset.empty()) throw InputError(a.kernel + " kernel needs --dataset");
      if (f == shapes::KernelFamily::polynomial ? a.degree < 1 : !(a.gamma > 0.0))
        throw InputError("kernel hyperparameter out of range");
    }
    return f;
  });
  kernel::GramMatrix g;
  if (family == shapes::KernelFamily::topological) {
    const auto file = cli::curves_from_json(cli::read_json(a.curves));
    std::vector<kernel::BettiCurveMatrix> curves;
    for (const auto& r : file.samples) curves.push_back(r.curve);
    const kernel::KernelParams params{a.gamma, a.p};
    g = kernel::gram_matrix(std::span<const kernel::BettiCurveMatrix>(curves),
                            [&](const auto& x, const auto& y) { return kernel::topo_kernel(x, y, params); });
  } else {
    const auto d = cli::dataset_from_json(cli::read_json(a.dataset));
    std::vector<std::vector<double>> flat;
    for (const auto& s : d.samples) flat.push_back(s.points.flat());
    const auto kind = family == shapes::KernelFamily::rbf         ? kernel::ConventionalKind::rbf
                      : family == shapes::KernelFamily::laplacian ? kernel::ConventionalKind::laplacian
                                                                  : kernel::ConventionalKind::polynomial;
    const double hyper = family == shapes::KernelFamily::polynomial ? a.degree : a.gamma;
    g = kernel::gram_matrix(std::span<const std::vector<double>>(flat), [&](const auto& x, const auto& y) {
      return kernel::conventional_kernel(x, y, kind, hyper);
    });
  }
  emit(a.out, cli::gram_csv(g));
}

// ---------------------------------------------------------------- experiments

struct AccuracyArgs {
  shapes::AccuracyConfig cfg;
  std::vector<std::string> kernels;
  double p = 2.0;
  std::string out;
  std::string svg;
  bool dry_run = false;
};

json kernel_json(const shapes::KernelSpec& k) {
  json j{{"family", k.name()}, {"hyper", k.hyper}};
  if (k.family == shapes::KernelFamily::topological) j["p"] = k.p;
  return j;
}

void run_accuracy(AccuracyArgs a) {
  checked([&] {
    if (!a.kernels.empty()) {
      a.cfg.kernels.clear();
      for (const auto& spec : a.kernels) {
        const auto [name, value] = split_spec(spec);
        a.cfg.kernels.push_back({shapes::family_from_name(name), value, a.p});
      }
    } else {
      for (auto& k : a.cfg.kernels) k.p = a.p;
    }
    a.cfg.validate();
    return 0;
  });
  if (a.dry_run) {
    json kernels = json::array();
    for (const auto& k : a.cfg.kernels) kernels.push_back(kernel_json(k));
    const json echo{{"format_version", cli::kFormatVersion},
                    {"command", "experiment accuracy"},
                    {"items", a.cfg.items},
                    {"points", a.cfg.points},
                    {"kernels", kernels},
                    {"split", a.cfg.split_ratio},
                    {"c", a.cfg.c},
                    {"kmax", a.cfg.k_max},
                    {"seeds", a.cfg.seeds}};
    std::cout << echo.dump(1) << "\n";
    return;
  }
  const auto rows = shapes::experiment_accuracy(a.cfg);
  emit(a.out, cli::accuracy_csv(rows));
  if (!a.svg.empty()) cli::write_text(a.svg, cli::accuracy_svg(rows));
}

struct RmseArgs {
  shapes::RmseConfig cfg;
  std::vector<std::string> sims;
  std::string qdrift_mode = "per_shot";
  std::string out;
  std::string svg;
  bool dry_run = false;
  bool quiet = false;
};

void run_rmse(RmseArgs a) {
  checked([&] {
    if (!a.sims.empty()) {
      a.cfg.simulations.clear();
      for (const auto& spec : a.sims) {
        const auto [name, reps] = split_spec(spec);
        if (reps != std::floor(reps)) throw InputError("repetitions must be an integer in '" + spec + "'");
        a.cfg.simulations.push_back({shapes::method_from_name(name), static_cast<int>(reps)});
      }
    }
    a.cfg.qdrift_mode = qdrift_mode_from_name(a.qdrift_mode);
    a.cfg.validate();
    return 0;
  });
  if (a.dry_run) {
    json sims = json::array();
    for (const auto& s : a.cfg.simulations) sims.push_back({{"method", shapes::method_name(s.method)}, {"reps", s.repetitions}});
    const json echo{{"format_version", cli::kFormatVersion},
                    {"command", "experiment rmse"},
                    {"items", a.cfg.items},
                    {"points", a.cfg.points},
                    {"kmax", a.cfg.k_max},
                    {"t", a.cfg.ancillas},
                    {"dataset_seed", a.cfg.dataset_seed},
                    {"sims", sims},
                    {"shots", a.cfg.shots},
                    {"seeds", a.cfg.seeds},
                    {"gamma", a.cfg.params.gamma},
                    {"p", a.cfg.params.p},
                    {"qdrift_mode", qdrift_mode_name(a.cfg.qdrift_mode)},
                    {"zero_bin", a.cfg.zero_bin_half_width}};
    std::cout << echo.dump(1) << "\n";
    return;
  }
  std::function<void(const std::string&)> progress;
  if (!a.quiet) progress = [](const std::string& s) { std::cerr << "simulating " << s << "\n"; };
  const auto result = shapes::experiment_rmse(a.cfg, progress);
  emit(a.out, cli::rmse_csv(result.rows));
  if (!a.svg.empty()) cli::write_text(a.svg, cli::rmse_svg(result.rows));
}

/// Flat key = value files: keys without a section belong to the selected
/// leaf subcommand, so config keys mirror that subcommand's flag names.
class FlatConfig : public CLI::ConfigINI {
 public:
  explicit FlatConfig(const CLI::App* root) : root_(root) {}

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    auto items = CLI::ConfigINI::from_config(input);
    std::vector<std::string> path;
    for (const CLI::App* app = root_; !app->get_subcommands().empty();) {
      app = app->get_subcommands().front();
      path.push_back(app->get_name());
    }
    for (auto& item : items) {
      if (!item.parents.empty())
        throw CLI::ConfigError("config files are flat key = value lists; sections are not supported");
      item.parents = path;
    }
    return items;
  }

 private:
  const CLI::App* root_;
};

void strict_config(CLI::App* app) { app->allow_config_extras(CLI::config_extras_mode::error); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topological kernels with classical and simulated quantum Betti numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "topoqk 1.0");
  app.set_config("--config", "", "Flat key = value file mirroring the subcommand's flag names");
  app.config_formatter(std::make_shared<FlatConfig>(&app));
  app.fallthrough();
  strict_config(&app);

  std::function<void()> action;

  auto* dataset = app.add_subcommand("dataset", "Shape datasets")->require_subcommand(1);
  DatasetArgs ds;
  auto* generate = dataset->add_subcommand("generate", "Generate a balanced triangle / sliced-quadrangle dataset");
  generate->add_option("--items", ds.items, "Number of shapes (even)")->capture_default_str();
  generate->add_option("--points", ds.points, "Perimeter points per shape")->capture_default_str();
  generate->add_option("--seed", ds.seed, "Master seed")->capture_default_str();
  generate->add_option("--out", ds.out, "Output JSON path (default stdout)");
  strict_config(generate);
  generate->callback([&] { action = [&] { run_dataset(ds); }; });

  BettiArgs ba;
  auto* betti = app.add_subcommand("betti", "Betti curves of every sample on the dataset's shared threshold grid");
  betti->add_option("--dataset", ba.dataset, "Dataset JSON")->required();
  betti->add_option("--out", ba.out, "Output JSON path (default stdout)");
  betti->add_option("--kmax", ba.k_max, "Highest Betti order")->capture_default_str();
  betti->add_option("--backend", ba.backend, "exact or lgz")->check(CLI::IsMember({"exact", "lgz"}))->capture_default_str();
  betti->add_option("--t", ba.t, "Phase-register qubits (lgz)")->capture_default_str();
  betti->add_option("--shots", ba.shots, "Shots per curve entry (lgz)")->capture_default_str();
  betti->add_option("--method", ba.method, "exact, trotter or qdrift (lgz)")->capture_default_str();
  betti->add_option("--reps", ba.reps, "Trotter slices or qDrift samples (lgz)")->capture_default_str();
  betti->add_option("--seed", ba.seed, "Master seed (lgz)")->capture_default_str();
  betti->add_option("--qdrift-mode", ba.qdrift_mode, "per_shot or fixed_product")->capture_default_str();
  betti->add_option("--zero-bin", ba.zero_bin, "Half width of the zero-phase bin")->capture_default_str();
  strict_config(betti);
  betti->callback([&] { action = [&] { run_betti(ba); }; });

  auto* kernel_cmd = app.add_subcommand("kernel", "Kernel matrices")->require_subcommand(1);
  GramArgs ga;
  auto* gram = kernel_cmd->add_subcommand("gram", "Full Gram matrix as CSV");
  gram->add_option("--curves", ga.curves, "Curve JSON (topological kernel)");
  gram->add_option("--dataset", ga.dataset, "Dataset JSON (conventional kernels)");
  gram->add_option("--kernel", ga.kernel, "topological, rbf, laplacian or polynomial")->capture_default_str();
  gram->add_option("--gamma", ga.gamma, "Kernel width")->capture_default_str();
  gram->add_option("--p", ga.p, "Curve distance exponent")->capture_default_str();
  gram->add_option("--degree", ga.degree, "Polynomial degree")->capture_default_str();
  gram->add_option("--out", ga.out, "Output CSV path (default stdout)");
  strict_config(gram);
  gram->callback([&] { action = [&] { run_gram(ga); }; });

  auto* experiment = app.add_subcommand("experiment", "Experiment sweeps")->require_subcommand(1);
  AccuracyArgs aa;
  auto* accuracy = experiment->add_subcommand("accuracy", "Test accuracy against sampled points per kernel");
  accuracy->add_option("--items", aa.cfg.items, "Dataset size")->capture_default_str();
  accuracy->add_option("--points", aa.cfg.points, "Point-count grid")->delimiter(',');
  accuracy->add_option("--kernels", aa.kernels, "Kernel grid as FAMILY:HYPER (default: full grid)")->delimiter(',');
  accuracy->add_option("--p", aa.p, "Curve distance exponent for topological kernels")->capture_default_str();
  accuracy->add_option("--split", aa.cfg.split_ratio, "Training fraction")->capture_default_str();
  accuracy->add_option("--c", aa.cfg.c, "SVM regularization")->capture_default_str();
  accuracy->add_option("--kmax", aa.cfg.k_max, "Highest Betti order")->capture_default_str();
  accuracy->add_option("--seeds", aa.cfg.seeds, "Seeds")->delimiter(',');
  accuracy->add_option("--out", aa.out, "Output CSV path (default stdout)");
  accuracy->add_option("--svg", aa.svg, "Also write an SVG plot");
  accuracy->add_flag("--dry-run", aa.dry_run, "Validate and echo the configuration");
  strict_config(accuracy);
  accuracy->callback([&] { action = [&] { run_accuracy(aa); }; });

  RmseArgs ra;
  auto* rmse = experiment->add_subcommand("rmse", "Gram RMSE of simulated against exact Betti curves");
  rmse->add_option("--items", ra.cfg.items, "Dataset size")->capture_default_str();
  rmse->add_option("--points", ra.cfg.points, "Points per shape")->capture_default_str();
  rmse->add_option("--kmax", ra.cfg.k_max, "Highest Betti order")->capture_default_str();
  rmse->add_option("--t", ra.cfg.ancillas, "Phase-register qubits")->capture_default_str();
  rmse->add_option("--dataset-seed", ra.cfg.dataset_seed, "Dataset seed")->capture_default_str();
  rmse->add_option("--sims", ra.sims, "Simulations as METHOD:REPS (default: trotter 2,3,4 and qdrift 1,2,5,10)")
      ->delimiter(',');
  rmse->add_option("--shots", ra.cfg.shots, "Shot grid")->delimiter(',');
  rmse->add_option("--seeds", ra.cfg.seeds, "Seeds")->delimiter(',');
  rmse->add_option("--gamma", ra.cfg.params.gamma, "Kernel width")->capture_default_str();
  rmse->add_option("--p", ra.cfg.params.p, "Curve distance exponent")->capture_default_str();
  rmse->add_option("--qdrift-mode", ra.qdrift_mode, "per_shot or fixed_product")->capture_default_str();
  rmse->add_option("--zero-bin", ra.cfg.zero_bin_half_width, "Half width of the zero-phase bin")->capture_default_str();
  rmse->add_option("--out", ra.out, "Output CSV path (default stdout)");
  rmse->add_option("--svg", ra.svg, "Also write an SVG plot");
  rmse->add_flag("--dry-run", ra.dry_run, "Validate and echo the configuration");
  rmse->add_flag("--quiet", ra.quiet, "No progress messages");
  strict_config(rmse);
  rmse->callback([&] { action = [&] { run_rmse(ra); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  try {
    action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
