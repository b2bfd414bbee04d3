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

// File formats of the command-line tool: JSON datasets and curve sets, CSV
// matrices and tables, SVG line plots.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "topoqk/kernel/curves.hpp"
#include "topoqk/kernel/kernels.hpp"
#include "topoqk/shapes/dataset.hpp"
#include "topoqk/shapes/experiments.hpp"

namespace topoqk::cli {

inline constexpr int kFormatVersion = 1;

nlohmann::json dataset_to_json(const shapes::Dataset& d);
shapes::Dataset dataset_from_json(const nlohmann::json& j);

/// Curves of one sample, optionally with per-entry LGZ counts.
struct CurveRecord {
  kernel::BettiCurveMatrix curve;
  std::optional<kernel::LgzCurveDetail> lgz;
};

struct CurveFile {
  std::string backend;
  std::size_t k_max = 0;
  std::vector<CurveRecord> samples;
};

nlohmann::json curves_to_json(const CurveFile& f);
/// Throws InputError when samples disagree on their threshold grids.
CurveFile curves_from_json(const nlohmann::json& j);

std::string gram_csv(const kernel::GramMatrix& g);
kernel::GramMatrix parse_gram_csv(const std::string& text);

std::string accuracy_csv(const std::vector<shapes::AccuracyRow>& rows);
std::string rmse_csv(const std::vector<shapes::RmseRow>& rows);

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

std::string line_plot_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<Series>& series);
std::string accuracy_svg(const std::vector<shapes::AccuracyRow>& rows);
std::string rmse_svg(const std::vector<shapes::RmseRow>& rows);

/// Round-trip decimal for doubles.
std::string format_double(double v);

nlohmann::json read_json(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);
/// Throws ResourceError when the file cannot be written.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace topoqk::cli
