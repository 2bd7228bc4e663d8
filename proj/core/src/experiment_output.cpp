/*
 * Copyright 2026 The digp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "digp/experiment.hpp"

namespace digp {
namespace {

std::string fixed(double v, int digits = 6) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string file_safe(std::string s) {
  for (char& c : s) {
    if (c == ':' || c == ',' || c == '/' || c == ' ') c = '_';
  }
  return s;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << compact(r.alpha) << ',' << r.algorithm << ',' << r.topology << ',' << r.smnr << ','
        << r.signal << ',' << fixed(r.srer_db) << ',' << fixed(r.asce) << ','
        << fixed(r.outer_mean) << ',' << fixed(r.outer_std) << ',' << fixed(r.inner_mean) << ','
        << fixed(r.inner_std) << ',' << r.realizations << ',' << fixed(r.wall_seconds) << '\n';
  }
}

void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path) {
  if (rows.empty()) throw std::invalid_argument("emit_csv: no rows to write");
  std::ofstream out = open_for_writing(path);
  write_csv(out, rows);
  if (!out) throw std::runtime_error("error while writing " + path.string());
}

std::vector<std::filesystem::path> emit_plotdata(const std::vector<ResultRow>& rows,
                                                 const std::filesystem::path& dir) {
  if (rows.empty()) throw std::invalid_argument("emit_plotdata: no rows to write");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

  std::vector<std::filesystem::path> written;

  // SRER / ASCE against alpha, one file per (algorithm, topology) curve.
  std::map<std::pair<std::string, std::string>, std::vector<const ResultRow*>> curves;
  for (const auto& r : rows) curves[{r.algorithm, r.topology}].push_back(&r);
  for (const auto& [curve, points] : curves) {
    const auto path = dir / ("curve_" + curve.first + "_" + file_safe(curve.second) + ".dat");
    std::ofstream out = open_for_writing(path);
    out << "# " << curve.first << ' ' << curve.second << " signal=" << points.front()->signal
        << " smnr=" << points.front()->smnr << '\n';
    out << "alpha srer_db asce outer_mean inner_mean\n";
    for (const ResultRow* r : points) {
      out << compact(r->alpha) << ' ' << fixed(r->srer_db) << ' ' << fixed(r->asce) << ' '
          << fixed(r->outer_mean) << ' ' << fixed(r->inner_mean) << '\n';
    }
    written.push_back(path);
  }

  // Metrics and iteration counts against ring degree, one file per
  // (algorithm, alpha), when more than one degree was run.
  std::map<std::pair<std::string, double>, std::map<std::size_t, const ResultRow*>> sweeps;
  for (const auto& r : rows) {
    if (r.topology.rfind("ring:", 0) != 0) continue;
    sweeps[{r.algorithm, r.alpha}][std::stoul(r.topology.substr(5))] = &r;
  }
  for (const auto& [key, by_degree] : sweeps) {
    if (by_degree.size() < 2) continue;
    const auto path =
        dir / ("connectivity_" + key.first + "_a" + compact(key.second) + ".dat");
    std::ofstream out = open_for_writing(path);
    out << "# " << key.first << " alpha=" << compact(key.second) << '\n';
    out << "degree srer_db asce outer_mean outer_std inner_mean inner_std\n";
    for (const auto& [degree, r] : by_degree) {
      out << degree << ' ' << fixed(r->srer_db) << ' ' << fixed(r->asce) << ' '
          << fixed(r->outer_mean) << ' ' << fixed(r->outer_std) << ' ' << fixed(r->inner_mean)
          << ' ' << fixed(r->inner_std) << '\n';
    }
    written.push_back(path);
  }
  return written;
}

std::string timing_summary(const std::vector<ResultRow>& rows, std::string_view baseline) {
  std::map<double, double> reference;
  for (const auto& r : rows) {
    if (r.algorithm == baseline) reference[r.alpha] = r.wall_seconds;
  }
  std::ostringstream os;
  os << "alpha,algorithm,topology,relative_time\n";
  for (const auto& r : rows) {
    auto it = reference.find(r.alpha);
    os << compact(r.alpha) << ',' << r.algorithm << ',' << r.topology << ',';
    if (it == reference.end() || it->second <= 0.0) {
      os << "n/a";
    } else {
      os << fixed(r.wall_seconds / it->second, 4);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace digp
