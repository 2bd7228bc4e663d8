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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "digp/distributed.hpp"
#include "digp/metrics.hpp"
#include "digp/signal_model.hpp"
#include "digp/topology.hpp"

namespace digp {

enum class Algorithm { kOmp, kSp, kFrogs, kDiOmp, kDiSp, kDiFrogs };

std::string_view name(Algorithm a);
Algorithm parse_algorithm(std::string_view text);
bool is_distributed(Algorithm a);

/// "ring:d", "rand:d" or "watts:q,p".
struct TopologySpec {
  enum class Kind { kRing, kRandom, kWatts };
  Kind kind = Kind::kRing;
  std::size_t degree = 0;  // ring / rand
  std::size_t q = 0;       // watts
  double p = 0.0;          // watts

  static TopologySpec parse(std::string_view text);
  std::string label() const;
  bool disconnected() const { return kind == Kind::kRing && degree == 0; }
};

/// Declarative sweep. Every (alpha, algorithm, topology) combination is one
/// cell; local algorithms ignore the topology list and run once per alpha.
struct ExperimentConfig {
  std::string name = "custom";
  std::size_t n = 500;
  std::size_t nodes = 10;
  std::size_t k_common = 10;
  std::size_t k_private = 10;
  SignalKind signal = SignalKind::kGaussian;
  std::optional<double> smnr_db = 20.0;       // nullopt: clean
  std::vector<double> alphas;
  /// Topology specs; "degree-sweep" expands to ring:0 .. ring:L-1.
  std::vector<std::string> topologies = {"ring:2"};
  std::vector<Algorithm> algorithms = {Algorithm::kDiOmp, Algorithm::kDiSp,
                                       Algorithm::kDiFrogs};
  std::size_t matrix_trials = 10;  // Q
  std::size_t signal_trials = 10;  // P
  std::uint64_t seed = 1;
  std::filesystem::path out_dir = "results";
  std::size_t max_rounds = 50;
  std::size_t threads = 0;         // 0: hardware concurrency
  std::string timing_baseline = "sp";

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  std::vector<TopologySpec> expanded_topologies() const;
  ModelParams model(double alpha) const;
};

/// alpha grid 0.10, 0.11, ..., 0.25 restricted to integral M.
std::vector<double> default_alpha_grid(std::size_t n);

std::string smnr_label(const std::optional<double>& smnr_db);
std::optional<double> parse_smnr(std::string_view text);

/// One output line: a cell's pooled metrics.
struct ResultRow {
  double alpha = 0.0;
  std::string algorithm;
  std::string topology;
  std::string smnr;
  std::string signal;
  double srer_db = 0.0;
  double asce = 0.0;
  double outer_mean = 0.0;
  double outer_std = 0.0;
  double inner_mean = 0.0;
  double inner_std = 0.0;
  std::size_t realizations = 0;  // L * Q * P
  double wall_seconds = 0.0;
};

/// One (node, realization) outcome, kept for diagnostics and tests.
struct RealizationRecord {
  double signal_energy = 0.0;
  double error_energy = 0.0;
  double distortion = 0.0;
  double outer_rounds = 0.0;
  double inner_iterations = 0.0;  // mean per local-solver call
  bool converged = true;
};

struct CellOutput {
  ResultRow row;
  MetricsAccumulator metrics;
  std::vector<RealizationRecord> realizations;
  std::size_t non_converged_runs = 0;
};

struct ExperimentOutput {
  std::vector<CellOutput> cells;
  std::vector<ResultRow> rows() const;
};

/// Runs every cell. Deterministic under a fixed seed: each realization's
/// random streams are keyed by (seed, M, matrix trial, signal trial, node),
/// so adding or removing cells leaves the others untouched.
ExperimentOutput run_experiment_detailed(const ExperimentConfig& config);
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

inline constexpr std::string_view kCsvHeader =
    "alpha,algorithm,topology,smnr_db,signal,srer_db,asce,outer_mean,outer_std,inner_mean,"
    "inner_std,realizations,wall_seconds";

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
/// Throws std::invalid_argument on empty rows (no file is created) and
/// std::runtime_error naming the path when it cannot be written.
void emit_csv(const std::vector<ResultRow>& rows, const std::filesystem::path& path);

/// Writes one whitespace-separated file per curve into `dir`:
///   curve_<algorithm>_<topology>.dat       alpha srer_db asce outer_mean inner_mean
///   connectivity_<algorithm>_a<alpha>.dat  degree srer_db asce outer_mean outer_std
///                                          inner_mean inner_std   (ring topologies)
/// Returns the files written.
std::vector<std::filesystem::path> emit_plotdata(const std::vector<ResultRow>& rows,
                                                 const std::filesystem::path& dir);

/// Wall time per cell relative to `baseline` at the same alpha, as a table.
std::string timing_summary(const std::vector<ResultRow>& rows, std::string_view baseline);

struct Preset {
  std::string name;
  std::string description;
  ExperimentConfig config;
};

/// Built-in sweeps: fig2 ... fig8 and net100.
const std::vector<Preset>& presets();
const Preset& find_preset(std::string_view name);

ExperimentConfig config_from_json(std::string_view text,
                                  const ExperimentConfig& defaults = ExperimentConfig{});
ExperimentConfig load_config(const std::filesystem::path& path);
std::string config_to_json(const ExperimentConfig& config);

}  // namespace digp
