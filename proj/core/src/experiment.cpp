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

#include "digp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace digp {

std::string_view name(Algorithm a) {
  switch (a) {
    case Algorithm::kOmp:
      return "omp";
    case Algorithm::kSp:
      return "sp";
    case Algorithm::kFrogs:
      return "frogs";
    case Algorithm::kDiOmp:
      return "diomp";
    case Algorithm::kDiSp:
      return "disp";
    case Algorithm::kDiFrogs:
      return "difrogs";
  }
  return "?";
}

Algorithm parse_algorithm(std::string_view text) {
  for (Algorithm a : {Algorithm::kOmp, Algorithm::kSp, Algorithm::kFrogs, Algorithm::kDiOmp,
                      Algorithm::kDiSp, Algorithm::kDiFrogs}) {
    if (name(a) == text) return a;
  }
  throw std::invalid_argument("unknown algorithm '" + std::string(text) +
                              "' (expected omp, sp, frogs, diomp, disp or difrogs)");
}

bool is_distributed(Algorithm a) {
  return a == Algorithm::kDiOmp || a == Algorithm::kDiSp || a == Algorithm::kDiFrogs;
}

namespace {

LocalSolver solver_of(Algorithm a) {
  switch (a) {
    case Algorithm::kOmp:
    case Algorithm::kDiOmp:
      return LocalSolver::kOmp;
    case Algorithm::kSp:
    case Algorithm::kDiSp:
      return LocalSolver::kSp;
    case Algorithm::kFrogs:
    case Algorithm::kDiFrogs:
      return LocalSolver::kFrogs;
  }
  throw std::invalid_argument("unknown algorithm");
}

DistributedAlgorithm distributed_of(Algorithm a) {
  switch (a) {
    case Algorithm::kDiOmp:
      return DistributedAlgorithm::kDiOmp;
    case Algorithm::kDiSp:
      return DistributedAlgorithm::kDiSp;
    case Algorithm::kDiFrogs:
      return DistributedAlgorithm::kDiFrogs;
    default:
      throw std::invalid_argument("not a distributed algorithm: " + std::string(name(a)));
  }
}

std::string format_number(const char* fmt, double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  std::size_t used = 0;
  if (text.empty() || text.front() < '0' || text.front() > '9') used = 0;
  else try {
    value = std::stoul(std::string(text), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

TopologySpec TopologySpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("topology '" + std::string(text) +
                                "' must look like ring:d, rand:d or watts:q,p");
  }
  const std::string_view kind = text.substr(0, colon);
  const std::string_view arg = text.substr(colon + 1);
  TopologySpec spec;
  if (kind == "ring" || kind == "rand") {
    spec.kind = kind == "ring" ? Kind::kRing : Kind::kRandom;
    spec.degree = parse_count(arg, "topology degree");
  } else if (kind == "watts") {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("watts topology needs q,p, got '" + std::string(arg) + "'");
    }
    spec.kind = Kind::kWatts;
    spec.q = parse_count(arg.substr(0, comma), "watts q");
    try {
      spec.p = std::stod(std::string(arg.substr(comma + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad watts rewiring probability in '" + std::string(text) + "'");
    }
  } else {
    throw std::invalid_argument("unknown topology kind '" + std::string(kind) + "'");
  }
  return spec;
}

std::string TopologySpec::label() const {
  switch (kind) {
    case Kind::kRing:
      return "ring:" + std::to_string(degree);
    case Kind::kRandom:
      return "rand:" + std::to_string(degree);
    case Kind::kWatts:
      return "watts:" + std::to_string(q) + "," + format_number("%g", p);
  }
  return "?";
}

std::vector<double> default_alpha_grid(std::size_t n) {
  std::vector<double> grid;
  for (int step = 10; step <= 25; ++step) {
    const double alpha = step / 100.0;
    try {
      measurements_for(alpha, n);
      grid.push_back(alpha);
    } catch (const std::invalid_argument&) {
    }
  }
  return grid;
}

std::string smnr_label(const std::optional<double>& smnr_db) {
  return smnr_db ? format_number("%g", *smnr_db) : "clean";
}

std::optional<double> parse_smnr(std::string_view text) {
  if (text == "clean") return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(std::string(text), &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad SMNR '" + std::string(text) + "' (expected dB value or clean)");
}

std::vector<TopologySpec> ExperimentConfig::expanded_topologies() const {
  std::vector<TopologySpec> out;
  for (const auto& t : topologies) {
    if (t == "degree-sweep") {
      for (std::size_t d = 0; d < nodes; ++d) out.push_back(TopologySpec{TopologySpec::Kind::kRing, d});
    } else {
      out.push_back(TopologySpec::parse(t));
    }
  }
  return out;
}

ModelParams ExperimentConfig::model(double alpha) const {
  return ModelParams::uniform(n, measurements_for(alpha, n), nodes, k_common, k_private, signal,
                              smnr_db);
}

void ExperimentConfig::validate() const {
  if (alphas.empty()) throw std::invalid_argument("config: alpha list is empty");
  for (double a : alphas) model(a).validate();
  if (matrix_trials == 0 || signal_trials == 0) {
    throw std::invalid_argument("config: trials Q and P must be at least 1");
  }
  if (algorithms.empty()) throw std::invalid_argument("config: no algorithms selected");
  const bool any_distributed =
      std::any_of(algorithms.begin(), algorithms.end(), [](Algorithm a) { return is_distributed(a); });
  if (any_distributed) {
    const auto specs = expanded_topologies();
    if (specs.empty()) throw std::invalid_argument("config: no topology for distributed algorithms");
    for (const auto& s : specs) {
      if (s.kind == TopologySpec::Kind::kWatts) {
        if (s.q < 1 || 2 * s.q > nodes - 1 || !(s.p >= 0.0 && s.p <= 1.0)) {
          throw std::invalid_argument("config: invalid topology " + s.label());
        }
      } else if (s.degree >= nodes || (s.kind == TopologySpec::Kind::kRandom && s.degree < 2)) {
        throw std::invalid_argument("config: invalid topology " + s.label() + " for L = " +
                                    std::to_string(nodes));
      }
    }
  }
}

std::vector<ResultRow> ExperimentOutput::rows() const {
  std::vector<ResultRow> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.push_back(c.row);
  return out;
}

namespace {

struct CellPlan {
  Algorithm algorithm;
  std::optional<TopologySpec> topology;  // nullopt: local solver on every node
  std::string topology_label;
};

std::vector<CellPlan> plan_cells(const ExperimentConfig& config) {
  std::vector<CellPlan> plan;
  const auto specs = config.expanded_topologies();
  for (Algorithm a : config.algorithms) {
    if (!is_distributed(a)) {
      plan.push_back({a, std::nullopt, "ring:0"});
      continue;
    }
    for (const auto& s : specs) {
      // C_0 means the standard algorithm run independently at every node.
      if (s.disconnected()) {
        plan.push_back({a, std::nullopt, s.label()});
      } else {
        plan.push_back({a, s, s.label()});
      }
    }
  }
  return plan;
}

struct TaskResult {
  std::vector<std::vector<RealizationRecord>> per_cell;
  std::vector<double> seconds;
  std::vector<bool> converged;
};

constexpr std::uint64_t key(Stream s) { return static_cast<std::uint64_t>(s); }

Ensemble realization(const ExperimentConfig& config, const ModelParams& params, std::size_t q,
                     std::size_t p) {
  const std::uint64_t m = params.m;
  Ensemble e;
  e.seed = config.seed;
  e.k_common = params.k_common;
  e.k_private = params.k_private;
  CounterRng common_rng = CounterRng::stream(config.seed, {key(Stream::kCommonSupport), m, q, p});
  const SupportSet common = draw_common_support(params, common_rng);
  for (std::size_t l = 0; l < params.nodes; ++l) {
    CounterRng matrix_rng = CounterRng::stream(config.seed, {key(Stream::kMatrix), m, q, l});
    CounterRng signal_rng = CounterRng::stream(config.seed, {key(Stream::kSignal), m, q, p, l});
    e.nodes.push_back(draw_node_problem(params, l,
                                        generate_sensing_matrix(params.m, params.n, matrix_rng),
                                        common, signal_rng));
  }
  return e;
}

Topology build_topology(const ExperimentConfig& config, const TopologySpec& spec, std::size_t m,
                        std::size_t q, std::size_t p,
                        const std::map<std::string, Topology>& watts) {
  switch (spec.kind) {
    case TopologySpec::Kind::kRing:
      return ring_topology(config.nodes, spec.degree);
    case TopologySpec::Kind::kRandom: {
      // A fresh random network for every Monte-Carlo realization.
      CounterRng rng =
          CounterRng::stream(config.seed, {key(Stream::kTopology), m, q, p, spec.degree});
      return random_topology(config.nodes, spec.degree, rng);
    }
    case TopologySpec::Kind::kWatts:
      return watts.at(spec.label());
  }
  throw std::logic_error("unreachable");
}

void summarize(const std::vector<double>& values, double& mean, double& stddev) {
  mean = 0.0;
  stddev = 0.0;
  if (values.empty()) return;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  for (double v : values) stddev += (v - mean) * (v - mean);
  stddev = std::sqrt(stddev / static_cast<double>(values.size()));
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

ExperimentOutput run_experiment_detailed(const ExperimentConfig& config) {
  config.validate();
  const std::vector<CellPlan> plan = plan_cells(config);
  const std::size_t trials = config.matrix_trials * config.signal_trials;

  // One network realization per small-world spec, shared by the whole experiment.
  std::map<std::string, Topology> watts;
  for (const auto& c : plan) {
    if (!c.topology || c.topology->kind != TopologySpec::Kind::kWatts) continue;
    const std::string label = c.topology->label();
    if (watts.count(label) != 0) continue;
    CounterRng rng = CounterRng::stream(
        config.seed, {key(Stream::kTopology), config.nodes, c.topology->q,
                      std::bit_cast<std::uint64_t>(c.topology->p)});
    watts.emplace(label, watts_strogatz(config.nodes, c.topology->q, c.topology->p, rng));
  }

  SimulationLimits limits;
  limits.max_rounds = config.max_rounds;

  ExperimentOutput output;
  for (double alpha : config.alphas) {
    const ModelParams params = config.model(alpha);
    std::vector<TaskResult> results(trials);

    parallel_for(trials, config.threads, [&](std::size_t task) {
      const std::size_t q = task / config.signal_trials;
      const std::size_t p = task % config.signal_trials;
      const Ensemble ensemble = realization(config, params, q, p);
      TaskResult& out = results[task];
      out.per_cell.resize(plan.size());
      out.seconds.assign(plan.size(), 0.0);
      out.converged.assign(plan.size(), true);

      for (std::size_t c = 0; c < plan.size(); ++c) {
        const CellPlan& cell = plan[c];
        auto& records = out.per_cell[c];
        const auto start = std::chrono::steady_clock::now();
        if (!cell.topology) {
          const LocalSolver solver = solver_of(cell.algorithm);
          for (std::size_t l = 0; l < ensemble.size(); ++l) {
            const NodeProblem& node = ensemble.nodes[l];
            const PursuitResult r = solve(solver, node.a, ensemble.k_max(l), node.y);
            records.push_back({node.x.squaredNorm(), (node.x - r.estimate).squaredNorm(),
                               support_distortion(node.true_support(), r.support), 0.0,
                               static_cast<double>(r.iterations), true});
          }
        } else {
          const Topology topology =
              build_topology(config, *cell.topology, params.m, q, p, watts);
          const SimulationResult sim =
              simulate(ensemble, topology, distributed_of(cell.algorithm), limits);
          out.converged[c] = sim.converged;
          for (std::size_t l = 0; l < ensemble.size(); ++l) {
            const NodeProblem& node = ensemble.nodes[l];
            const PursuitResult& r = sim.estimates[l];
            records.push_back({node.x.squaredNorm(), (node.x - r.estimate).squaredNorm(),
                               support_distortion(node.true_support(), r.support),
                               static_cast<double>(sim.outer_rounds[l]),
                               static_cast<double>(sim.inner_iterations[l]) /
                                   static_cast<double>(sim.solver_calls[l]),
                               sim.converged});
          }
        }
        out.seconds[c] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      }
    });

    for (std::size_t c = 0; c < plan.size(); ++c) {
      CellOutput cell;
      std::vector<double> outer;
      std::vector<double> inner;
      double seconds = 0.0;
      for (const TaskResult& t : results) {
        for (const auto& rec : t.per_cell[c]) {
          cell.metrics.add_sample(rec.signal_energy, rec.error_energy, rec.distortion);
          cell.realizations.push_back(rec);
          outer.push_back(rec.outer_rounds);
          inner.push_back(rec.inner_iterations);
        }
        seconds += t.seconds[c];
        if (!t.converged[c]) ++cell.non_converged_runs;
      }
      ResultRow& row = cell.row;
      row.alpha = alpha;
      row.algorithm = std::string(name(plan[c].algorithm));
      row.topology = plan[c].topology_label;
      row.smnr = smnr_label(config.smnr_db);
      row.signal = std::string(name(config.signal));
      row.realizations = cell.realizations.size();
      row.srer_db = srer(cell.metrics).db;
      row.asce = asce(cell.metrics);
      summarize(outer, row.outer_mean, row.outer_std);
      summarize(inner, row.inner_mean, row.inner_std);
      row.wall_seconds = seconds;
      output.cells.push_back(std::move(cell));
    }
  }
  return output;
}

}  // namespace digp
