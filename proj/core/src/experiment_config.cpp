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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "digp/experiment.hpp"

namespace digp {
namespace {

using nlohmann::json;

std::vector<double> grid(std::size_t n, double lo, double hi) {
  std::vector<double> out;
  for (double a : default_alpha_grid(n)) {
    if (a >= lo - 1e-12 && a <= hi + 1e-12) out.push_back(a);
  }
  return out;
}

ExperimentConfig base(std::string name) {
  ExperimentConfig c;
  c.name = name;
  c.alphas = default_alpha_grid(c.n);
  c.out_dir = "results/" + name;
  return c;
}

std::vector<Preset> build_presets() {
  const std::vector<Algorithm> all = {Algorithm::kOmp,   Algorithm::kSp,   Algorithm::kFrogs,
                                      Algorithm::kDiOmp, Algorithm::kDiSp, Algorithm::kDiFrogs};
  std::vector<Preset> out;

  ExperimentConfig fig2 = base("fig2");
  fig2.alphas = {0.10, 0.15, 0.20, 0.25};
  fig2.topologies = {"degree-sweep"};
  fig2.algorithms = {Algorithm::kDiSp, Algorithm::kDiFrogs};
  out.push_back({"fig2", "inner/outer iteration counts of DiSP and DiFROGS vs ring degree", fig2});

  ExperimentConfig fig3 = base("fig3");
  fig3.alphas = grid(fig3.n, 0.10, 0.20);
  fig3.topologies = {"degree-sweep"};
  out.push_back({"fig3", "SRER vs alpha for ring degrees 0..L-1, gaussian, SMNR 20 dB", fig3});

  ExperimentConfig fig4 = base("fig4");
  fig4.topologies = {"ring:2", "rand:2"};
  out.push_back({"fig4", "fixed ring:2 vs random rand:2 network, gaussian, SMNR 20 dB", fig4});

  auto comparison = [&](std::string name, SignalKind kind, std::optional<double> smnr,
                        std::string what) {
    ExperimentConfig c = base(name);
    c.signal = kind;
    c.smnr_db = smnr;
    c.algorithms = all;
    c.topologies = {"ring:2", "ring:" + std::to_string(c.nodes - 1)};
    out.push_back({name, "disconnected vs ring:2 vs joint, " + what, c});
  };
  comparison("fig5", SignalKind::kGaussian, std::nullopt, "gaussian, clean");
  comparison("fig6", SignalKind::kGaussian, 20.0, "gaussian, SMNR 20 dB");
  comparison("fig7", SignalKind::kBinary, std::nullopt, "binary, clean");
  comparison("fig8", SignalKind::kBinary, 20.0, "binary, SMNR 20 dB");

  ExperimentConfig net = base("net100");
  net.nodes = 100;
  net.algorithms = all;
  net.topologies = {"watts:3,0.3"};
  net.matrix_trials = 2;
  net.signal_trials = 2;
  out.push_back({"net100", "100-node Watts-Strogatz network (q=3, p=0.3), gaussian, SMNR 20 dB",
                 net});
  return out;
}

template <typename T>
void read_if(const json& j, const char* field, T& dst) {
  if (j.contains(field)) dst = j.at(field).get<T>();
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset& find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown experiment preset '" + std::string(name) + "'");
}

ExperimentConfig config_from_json(std::string_view text, const ExperimentConfig& defaults) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  static const std::vector<std::string> known = {
      "name",  "N",      "L",       "K_common", "K_private",  "signal",  "smnr",    "alpha",
      "topology", "algorithms", "trials", "seed", "out", "max_rounds", "threads", "baseline"};
  for (const auto& [field, value] : j.items()) {
    if (std::find(known.begin(), known.end(), field) == known.end()) {
      throw std::invalid_argument("config: unknown field '" + field + "'");
    }
  }

  ExperimentConfig c = defaults;
  try {
    read_if(j, "name", c.name);
    read_if(j, "N", c.n);
    read_if(j, "L", c.nodes);
    read_if(j, "K_common", c.k_common);
    read_if(j, "K_private", c.k_private);
    read_if(j, "seed", c.seed);
    read_if(j, "max_rounds", c.max_rounds);
    read_if(j, "threads", c.threads);
    read_if(j, "baseline", c.timing_baseline);
    if (j.contains("signal")) c.signal = parse_signal_kind(j.at("signal").get<std::string>());
    if (j.contains("smnr")) {
      const json& s = j.at("smnr");
      c.smnr_db = s.is_string() ? parse_smnr(s.get<std::string>())
                                : std::optional<double>(s.get<double>());
    }
    if (j.contains("alpha")) {
      const json& a = j.at("alpha");
      c.alphas = a.is_array() ? a.get<std::vector<double>>() : std::vector<double>{a.get<double>()};
    } else if (j.contains("N")) {
      c.alphas = default_alpha_grid(c.n);
    }
    if (j.contains("topology")) {
      const json& t = j.at("topology");
      c.topologies = t.is_array() ? t.get<std::vector<std::string>>()
                                  : std::vector<std::string>{t.get<std::string>()};
    }
    if (j.contains("algorithms")) {
      c.algorithms.clear();
      for (const auto& a : j.at("algorithms").get<std::vector<std::string>>()) {
        c.algorithms.push_back(parse_algorithm(a));
      }
    }
    if (j.contains("trials")) {
      const auto t = j.at("trials").get<std::vector<std::size_t>>();
      if (t.size() != 2) throw std::invalid_argument("config: trials must be [Q, P]");
      c.matrix_trials = t[0];
      c.signal_trials = t[1];
    }
    if (j.contains("out")) c.out_dir = j.at("out").get<std::string>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (c.alphas.empty()) c.alphas = default_alpha_grid(c.n);
  return c;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  return run_experiment_detailed(config).rows();
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return config_from_json(text.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json j;
  j["name"] = c.name;
  j["N"] = c.n;
  j["L"] = c.nodes;
  j["K_common"] = c.k_common;
  j["K_private"] = c.k_private;
  j["signal"] = std::string(name(c.signal));
  if (c.smnr_db) {
    j["smnr"] = *c.smnr_db;
  } else {
    j["smnr"] = "clean";
  }
  j["alpha"] = c.alphas;
  j["topology"] = c.topologies;
  std::vector<std::string> algorithms;
  for (Algorithm a : c.algorithms) algorithms.emplace_back(name(a));
  j["algorithms"] = algorithms;
  j["trials"] = {c.matrix_trials, c.signal_trials};
  j["seed"] = c.seed;
  j["out"] = c.out_dir.string();
  j["max_rounds"] = c.max_rounds;
  j["threads"] = c.threads;
  j["baseline"] = c.timing_baseline;
  return j.dump(2);
}

}  // namespace digp
