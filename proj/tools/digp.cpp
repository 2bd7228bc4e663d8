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

// digp: run distributed greedy pursuit sweeps from the command line.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "digp/experiment.hpp"
#include "digp/random.hpp"
#include "digp/topology.hpp"

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct RunOverrides {
  std::string config;
  std::string preset;
  std::vector<double> alphas;
  std::vector<std::string> algorithms;
  std::vector<std::string> topologies;
  std::string signal;
  std::string smnr;
  std::string trials;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<std::size_t> n, nodes, k_common, k_private, max_rounds, threads;
  std::string baseline;
  bool quiet = false;
};

digp::ExperimentConfig resolve(const RunOverrides& o) {
  digp::ExperimentConfig c;
  if (!o.preset.empty()) c = digp::find_preset(o.preset).config;
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw std::runtime_error("cannot open config " + o.config);
    std::ostringstream text;
    text << in.rdbuf();
    c = digp::config_from_json(text.str(), c);
  }

  if (o.n) {
    c.n = *o.n;
    if (o.alphas.empty()) c.alphas = digp::default_alpha_grid(c.n);
  }
  if (o.nodes) c.nodes = *o.nodes;
  if (o.k_common) c.k_common = *o.k_common;
  if (o.k_private) c.k_private = *o.k_private;
  if (o.max_rounds) c.max_rounds = *o.max_rounds;
  if (o.threads) c.threads = *o.threads;
  if (o.seed) c.seed = *o.seed;
  if (!o.alphas.empty()) c.alphas = o.alphas;
  if (!o.algorithms.empty()) {
    c.algorithms.clear();
    for (const auto& a : o.algorithms) {
      for (const auto& part : split(a, ',')) c.algorithms.push_back(digp::parse_algorithm(part));
    }
  }
  if (!o.topologies.empty()) c.topologies = o.topologies;
  if (!o.signal.empty()) c.signal = digp::parse_signal_kind(o.signal);
  if (!o.smnr.empty()) c.smnr_db = digp::parse_smnr(o.smnr);
  if (!o.trials.empty()) {
    const auto parts = split(o.trials, ',');
    if (parts.size() != 2) throw std::invalid_argument("--trials expects Q,P");
    c.matrix_trials = std::stoul(parts[0]);
    c.signal_trials = std::stoul(parts[1]);
  }
  if (!o.out.empty()) c.out_dir = o.out;
  if (!o.baseline.empty()) c.timing_baseline = o.baseline;
  if (c.alphas.empty()) c.alphas = digp::default_alpha_grid(c.n);
  c.validate();
  return c;
}

int run(const RunOverrides& o) {
  const digp::ExperimentConfig config = resolve(o);
  std::filesystem::create_directories(config.out_dir);
  {
    std::ofstream cfg(config.out_dir / "config.json");
    cfg << digp::config_to_json(config) << '\n';
  }
  const digp::ExperimentOutput output = digp::run_experiment_detailed(config);
  const auto rows = output.rows();
  digp::emit_csv(rows, config.out_dir / "results.csv");
  digp::emit_plotdata(rows, config.out_dir / "plotdata");
  const std::string timing = digp::timing_summary(rows, config.timing_baseline);
  {
    std::ofstream t(config.out_dir / "timing.txt");
    t << timing;
  }
  std::size_t stuck = 0;
  for (const auto& cell : output.cells) stuck += cell.non_converged_runs;
  if (!o.quiet) {
    digp::write_csv(std::cout, rows);
    std::cout << '\n' << timing;
  }
  if (stuck > 0) {
    std::cerr << "warning: " << stuck << " simulation(s) hit the round cap of "
              << config.max_rounds << '\n';
  }
  std::cerr << "wrote " << (config.out_dir / "results.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed greedy pursuit experiments"};
  app.require_subcommand(1);

  RunOverrides o;
  CLI::App* run_cmd = app.add_subcommand("run", "Run a sweep and write CSV and plot data");
  run_cmd->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
  run_cmd->add_option("--preset", o.preset, "Start from a built-in experiment");
  run_cmd->add_option("--alpha", o.alphas, "Measurement fractions M/N")->delimiter(',');
  run_cmd->add_option("--algorithms", o.algorithms,
                      "omp, sp, frogs, diomp, disp, difrogs")->delimiter(',');
  run_cmd->add_option("--topology", o.topologies,
                      "ring:d, rand:d, watts:q,p or degree-sweep");
  run_cmd->add_option("--signal", o.signal, "gaussian or binary");
  run_cmd->add_option("--smnr", o.smnr, "SMNR in dB, or clean");
  run_cmd->add_option("--trials", o.trials, "Q,P");
  run_cmd->add_option("--seed", o.seed, "Master seed");
  run_cmd->add_option("--out", o.out, "Output directory");
  run_cmd->add_option("--N", o.n, "Signal dimension");
  run_cmd->add_option("--L", o.nodes, "Number of nodes");
  run_cmd->add_option("--K_common", o.k_common, "Common support size");
  run_cmd->add_option("--K_private", o.k_private, "Private support size");
  run_cmd->add_option("--max_rounds", o.max_rounds, "Round cap for distributed runs");
  run_cmd->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  run_cmd->add_option("--baseline", o.baseline, "Algorithm used to normalize timings");
  run_cmd->add_flag("--quiet", o.quiet, "Do not echo the CSV");

  CLI::App* list_cmd = app.add_subcommand("list-experiments", "Print built-in presets");

  std::string topo_text;
  std::size_t topo_nodes = 10;
  std::uint64_t topo_seed = 1;
  CLI::App* topo_cmd = app.add_subcommand("topology", "Print a network in adjacency text form");
  topo_cmd->add_option("spec", topo_text, "ring:d, rand:d or watts:q,p")->required();
  topo_cmd->add_option("--L", topo_nodes, "Number of nodes");
  topo_cmd->add_option("--seed", topo_seed, "Seed for random networks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) {
      if (o.config.empty() && o.preset.empty()) {
        std::cerr << "run: one of --config or --preset is required\n";
        return 2;
      }
      return run(o);
    }
    if (*list_cmd) {
      for (const auto& p : digp::presets()) {
        std::printf("%-8s %s\n", p.name.c_str(), p.description.c_str());
      }
      return 0;
    }
    if (*topo_cmd) {
      const auto spec = digp::TopologySpec::parse(topo_text);
      digp::CounterRng rng = digp::CounterRng::stream(topo_seed, {static_cast<std::uint64_t>(digp::Stream::kTopology)});
      switch (spec.kind) {
        case digp::TopologySpec::Kind::kRing:
          digp::write_topology(std::cout, digp::ring_topology(topo_nodes, spec.degree));
          break;
        case digp::TopologySpec::Kind::kRandom:
          digp::write_topology(std::cout, digp::random_topology(topo_nodes, spec.degree, rng));
          break;
        case digp::TopologySpec::Kind::kWatts:
          digp::write_topology(std::cout,
                               digp::watts_strogatz(topo_nodes, spec.q, spec.p, rng));
          break;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
