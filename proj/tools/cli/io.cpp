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

#include "cli/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "topoqk/errors.hpp"

namespace topoqk::cli {

using nlohmann::json;

namespace {

template <typename M>
json matrix_to_json(const M& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename M>
M matrix_from_json(const json& j, Eigen::Index rows, Eigen::Index cols, const std::string& what) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
    throw InputError(what + " must have " + std::to_string(rows) + " rows");
  M m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw InputError(what + " must have " + std::to_string(cols) + " columns");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<typename M::Scalar>();
  }
  return m;
}

void check_version(const json& j) {
  if (!j.is_object() || !j.contains("format_version") || j["format_version"] != kFormatVersion)
    throw InputError("unsupported or missing format_version (expected " + std::to_string(kFormatVersion) + ")");
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json dataset_to_json(const shapes::Dataset& d) {
  json samples = json::array();
  for (const auto& s : d.samples) {
    json points = json::array();
    for (std::size_t i = 0; i < s.points.size(); ++i) points.push_back({s.points.point(i)[0], s.points.point(i)[1]});
    samples.push_back({{"label", shapes::name_of(s.kind)},
                       {"points", std::move(points)},
                       {"rotation", s.transform.rotation},
                       {"shear_x", s.transform.shear_x},
                       {"shear_y", s.transform.shear_y}});
  }
  return {{"format_version", kFormatVersion}, {"seed", d.seed}, {"samples", std::move(samples)}};
}

shapes::Dataset dataset_from_json(const json& j) {
  check_version(j);
  shapes::Dataset d;
  try {
    d.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& s : j.at("samples")) {
      std::vector<std::vector<double>> pts;
      for (const auto& p : s.at("points")) pts.push_back(p.get<std::vector<double>>());
      d.samples.push_back({shapes::kind_from_name(s.at("label").get<std::string>()), tda::PointCloud(pts),
                           {s.value("rotation", 0.0), s.value("shear_x", 0.0), s.value("shear_y", 0.0)}});
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed dataset file: ") + e.what());
  }
  if (d.samples.empty()) throw InputError("dataset file has no samples");
  return d;
}

json curves_to_json(const CurveFile& f) {
  json samples = json::array();
  for (const auto& rec : f.samples) {
    json s{{"thresholds", rec.curve.thresholds.values()}, {"values", matrix_to_json(rec.curve.values)}};
    if (rec.lgz) {
      s["zero_counts"] = matrix_to_json(rec.lgz->zero_counts);
      s["shots"] = matrix_to_json(rec.lgz->shots);
    }
    samples.push_back(std::move(s));
  }
  return {{"format_version", kFormatVersion}, {"backend", f.backend}, {"k_max", f.k_max}, {"samples", std::move(samples)}};
}

CurveFile curves_from_json(const json& j) {
  check_version(j);
  CurveFile f;
  try {
    f.backend = j.at("backend").get<std::string>();
    f.k_max = j.at("k_max").get<std::size_t>();
    const auto rows = static_cast<Eigen::Index>(f.k_max + 1);
    for (const auto& s : j.at("samples")) {
      tda::ThresholdSequence grid(s.at("thresholds").get<std::vector<double>>());
      const auto cols = static_cast<Eigen::Index>(grid.size());
      CurveRecord rec{{f.k_max, grid, matrix_from_json<Eigen::MatrixXd>(s.at("values"), rows, cols, "values")}, {}};
      if (s.contains("zero_counts")) {
        using Counts = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
        rec.lgz = kernel::LgzCurveDetail{rec.curve, matrix_from_json<Counts>(s.at("zero_counts"), rows, cols, "zero_counts"),
                                         matrix_from_json<Counts>(s.at("shots"), rows, cols, "shots")};
      }
      if (!f.samples.empty() && f.samples.front().curve.thresholds.values() != grid.values())
        throw InputError("threshold grid of sample " + std::to_string(f.samples.size()) +
                         " differs from sample 0; curves must share one grid");
      f.samples.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed curve file: ") + e.what());
  }
  if (f.samples.empty()) throw InputError("curve file has no samples");
  return f;
}

std::string gram_csv(const kernel::GramMatrix& g) {
  std::string out;
  char buf[64];
  for (Eigen::Index c = 0; c < g.cols(); ++c) out += (c ? "," : "") + std::to_string(c);
  out += '\n';
  for (Eigen::Index r = 0; r < g.rows(); ++r) {
    for (Eigen::Index c = 0; c < g.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", g(r, c));
      if (c) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

kernel::GramMatrix parse_gram_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      double v = 0.0;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size()) throw InputError("bad CSV cell '" + cell + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  kernel::GramMatrix g(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw InputError("Gram CSV is not square");
    for (std::size_t c = 0; c < rows.size(); ++c) g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
  }
  return g;
}

std::string accuracy_csv(const std::vector<shapes::AccuracyRow>& rows) {
  std::string out = "kernel,hyper,n_points,accuracy,seed\n";
  for (const auto& r : rows)
    out += r.kernel + ',' + format_double(r.hyper) + ',' + std::to_string(r.n_points) + ',' + format_double(r.accuracy) +
           ',' + std::to_string(r.seed) + '\n';
  return out;
}

std::string rmse_csv(const std::vector<shapes::RmseRow>& rows) {
  std::string out = "method,repetitions,shots,rmse,seed\n";
  for (const auto& r : rows)
    out += r.method + ',' + std::to_string(r.repetitions) + ',' + std::to_string(r.shots) + ',' + format_double(r.rmse) +
           ',' + std::to_string(r.seed) + '\n';
  return out;
}

std::string line_plot_svg(const std::string& title, const std::string& x_label, const std::string& y_label,
                          const std::vector<Series>& series) {
  constexpr double kWidth = 720, kHeight = 480, kLeft = 70, kRight = 200, kTop = 40, kBottom = 60;
  double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
  for (const auto& s : series)
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      x0 = std::min(x0, s.x[i]);
      x1 = std::max(x1, s.x[i]);
      y0 = std::min(y0, s.y[i]);
      y1 = std::max(y1, s.y[i]);
    }
  if (!(x0 <= x1)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 == x0) x1 = x0 + 1;
  y0 = std::min(y0, 0.0);
  if (y1 == y0) y1 = y0 + 1;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return kTop + ph - (y - y0) / (y1 - y0) * ph; };
  static const char* kColors[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << xml_escape(title)
      << "</text>\n"
      << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4, yv = y0 + (y1 - y0) * i / 4;
    svg << "<text x=\"" << px(xv) << "\" y=\"" << kTop + ph + 18 << "\" text-anchor=\"middle\">" << format_double(std::round(xv * 1000) / 1000)
        << "</text>\n"
        << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">"
        << format_double(std::round(yv * 1000) / 1000) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 16 << "\" text-anchor=\"middle\">" << xml_escape(x_label)
      << "</text>\n"
      << "<text transform=\"translate(18," << kTop + ph / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << xml_escape(y_label) << "</text>\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kColors[k % std::size(kColors)];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) svg << (i ? " " : "") << px(s.x[i]) << ',' << py(s.y[i]);
    svg << "\"/>\n";
    const double ly = kTop + 14 + 16 * static_cast<double>(k);
    svg << "<line x1=\"" << kWidth - kRight + 12 << "\" y1=\"" << ly - 4 << "\" x2=\"" << kWidth - kRight + 32 << "\" y2=\""
        << ly - 4 << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << kWidth - kRight + 38 << "\" y=\"" << ly << "\">" << xml_escape(s.name) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

std::string accuracy_svg(const std::vector<shapes::AccuracyRow>& rows) {
  // One line per kernel configuration, accuracy averaged over seeds.
  std::map<std::string, std::map<std::size_t, std::pair<double, int>>> acc;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    const auto name = r.kernel + " " + format_double(r.hyper);
    if (!acc.contains(name)) order.push_back(name);
    auto& cell = acc[name][r.n_points];
    cell.first += r.accuracy;
    cell.second += 1;
  }
  std::vector<Series> series;
  for (const auto& name : order) {
    Series s{name, {}, {}};
    for (const auto& [n, cell] : acc[name]) {
      s.x.push_back(static_cast<double>(n));
      s.y.push_back(cell.first / cell.second);
    }
    series.push_back(std::move(s));
  }
  return line_plot_svg("Test accuracy", "sampled points", "accuracy", series);
}

std::string rmse_svg(const std::vector<shapes::RmseRow>& rows) {
  std::map<std::string, std::map<std::int64_t, std::pair<double, int>>> acc;
  std::vector<std::string> order;
  for (const auto& r : rows) {
    const auto name = r.method + " r=" + std::to_string(r.repetitions);
    if (!acc.contains(name)) order.push_back(name);
    auto& cell = acc[name][r.shots];
    cell.first += r.rmse;
    cell.second += 1;
  }
  std::vector<Series> series;
  for (const auto& name : order) {
    Series s{name, {}, {}};
    for (const auto& [shots, cell] : acc[name]) {
      s.x.push_back(static_cast<double>(shots));
      s.y.push_back(cell.first / cell.second);
    }
    series.push_back(std::move(s));
  }
  return line_plot_svg("Gram RMSE against the exact kernel", "shots", "RMSE", series);
}

json read_json(const std::filesystem::path& path) {
  try {
    return json::parse(read_text(path));
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ResourceError("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot write " + path.string());
  out << text;
  if (!out) throw ResourceError("write failed for " + path.string());
}

}  // namespace topoqk::cli
