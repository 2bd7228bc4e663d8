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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails. Runs at desk scale.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "digp/distributed.hpp"
#include "digp/experiment.hpp"
#include "digp/metrics.hpp"
#include "digp/pursuit.hpp"
#include "digp/signal_model.hpp"
#include "digp/topology.hpp"
#include "oracles.hpp"

namespace {

using namespace digp;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

oracle::Idx idx(const SupportSet& s) {
  return oracle::Idx(s.indices().begin(), s.indices().end());
}

ExperimentConfig desk(double alpha, std::vector<std::string> topologies,
                      std::vector<Algorithm> algorithms) {
  ExperimentConfig c;
  c.n = 500;
  c.nodes = 10;
  c.k_common = 10;
  c.k_private = 10;
  c.alphas = {alpha};
  c.topologies = std::move(topologies);
  c.algorithms = std::move(algorithms);
  c.matrix_trials = 10;
  c.signal_trials = 10;
  c.seed = 1;
  return c;
}

const ResultRow& row(const std::vector<ResultRow>& rows, double alpha, const std::string& alg,
                     const std::string& topo) {
  for (const auto& r : rows) {
    if (r.alpha == alpha && r.algorithm == alg && r.topology == topo) return r;
  }
  throw std::runtime_error("missing row " + alg + " " + topo);
}

std::string csv_without_time(std::vector<ResultRow> rows) {
  for (auto& r : rows) r.wall_seconds = 0.0;
  std::ostringstream os;
  write_csv(os, rows);
  return os.str();
}

const std::vector<Algorithm> kDistributed = {Algorithm::kDiOmp, Algorithm::kDiSp,
                                             Algorithm::kDiFrogs};

Outcome iteration_counts() {
  std::size_t bad_omp = 0, bad_rounds = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Ensemble e =
        generate_ensemble(ModelParams::uniform(500, 75, 10, 10, 10, SignalKind::kGaussian, 20.0),
                          1000 + s);
    const NodeProblem& p = e.nodes[0];
    const SupportSet seed = max_indices_within(p.x, p.common, s % 11);
    if (mod_omp(p.a, 20, p.y, seed).iterations != 20 - seed.size()) ++bad_omp;
    const SimulationResult r = simulate(e, ring_topology(10, 2), DistributedAlgorithm::kDiOmp);
    for (std::size_t rounds : r.outer_rounds) bad_rounds += rounds != 10;
  }
  return {bad_omp == 0 && bad_rounds == 0,
          fmt("modOMP mismatches %.0f/100, DiOMP nodes with rounds != 10: %.0f/1000", bad_omp,
              bad_rounds)};
}

// Exactly 3-sparse instances built independently of the library generator.
Outcome oracle_equivalence() {
  std::size_t checked = 0, wrong = 0;
  std::mt19937_64 gen(2024);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 200; ++trial) {
    Matrix a(10, 16);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(gen);
    a.colwise().normalize();
    oracle::Idx all(16);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), gen);
    Vector x = Vector::Zero(16);
    for (int j = 0; j < 3; ++j) x(static_cast<Eigen::Index>(all[j])) = normal(gen);
    const Vector y = a * x;
    const oracle::Idx best = oracle::best_subset(a, y, 3);
    for (LocalSolver solver : {LocalSolver::kOmp, LocalSolver::kSp, LocalSolver::kFrogs}) {
      const PursuitResult r = solve(solver, a, 3, y);
      if (r.residual_norm > 1e-9) continue;
      ++checked;
      wrong += idx(r.support) != best;
    }
  }
  return {checked > 0 && wrong == 0,
          fmt("%.0f zero-residual solutions checked, %.0f disagree with exhaustive search",
              checked, wrong)};
}

Outcome frogs_dominance() {
  std::size_t worse = 0;
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const NodeProblem p =
        generate_ensemble(ModelParams::uniform(100, 30, 1, 5, 5, SignalKind::kGaussian, 20.0),
                          3000 + s)
            .nodes[0];
    const double omp = mod_omp(p.a, 10, p.y).residual_norm;
    const double fr = frogs(p.a, 10, p.y).residual_norm;
    if (fr > omp) {
      ++worse;
      worst = std::max(worst, fr - omp);
    }
  }
  return {worse == 0,
          fmt("FROGS residual above modOMP on %.0f/1000 instances (largest excess %.4f)", worse,
              worst)};
}

Outcome connectivity_gain(const std::vector<ResultRow>& rows) {
  bool ok = true;
  std::string detail;
  for (const char* alg : {"diomp", "disp", "difrogs"}) {
    std::vector<double> s;
    for (int d = 0; d <= 9; ++d) s.push_back(row(rows, 0.15, alg, "ring:" + std::to_string(d)).srer_db);
    double drop = 0.0;
    for (int d = 0; d < 9; ++d) drop = std::max(drop, s[d] - s[d + 1]);
    const bool alg_ok = s[0] < s[2] && s[2] <= s[9] + 0.5 && drop <= 0.5;
    ok = ok && alg_ok;
    detail += alg + fmt(" C0 %.2f C2 %.2f C9 %.2f maxdrop %.2f; ", s[0], s[2], s[9], drop);
  }
  const double gain = row(rows, 0.15, "diomp", "ring:2").srer_db - row(rows, 0.15, "diomp", "ring:0").srer_db;
  ok = ok && gain >= 3.0;
  detail += fmt("DiOMP C2-C0 %.2f dB", gain);
  return {ok, detail};
}

Outcome centralized_gap() {
  ExperimentConfig c = desk(0.15, {"ring:2"}, {Algorithm::kOmp, Algorithm::kDiOmp});
  c.smnr_db.reset();
  const auto rows = run_experiment(c);
  const double omp = row(rows, 0.15, "omp", "ring:0").srer_db;
  const double di = row(rows, 0.15, "diomp", "ring:2").srer_db;
  return {di - omp >= 8.0, fmt("OMP %.2f dB, DiOMP C2 %.2f dB, gap %.2f dB", omp, di, di - omp)};
}

Outcome fixed_vs_random() {
  ExperimentConfig c = desk(0.15, {"ring:2", "rand:2"}, kDistributed);
  c.alphas = {0.15, 0.20};
  const auto rows = run_experiment(c);
  double srer_gap = 0.0, asce_gap = 0.0;
  std::string detail;
  for (double a : c.alphas) {
    for (const char* alg : {"diomp", "disp", "difrogs"}) {
      const ResultRow& f = row(rows, a, alg, "ring:2");
      const ResultRow& r = row(rows, a, alg, "rand:2");
      srer_gap = std::max(srer_gap, std::abs(f.srer_db - r.srer_db));
      asce_gap = std::max(asce_gap, std::abs(f.asce - r.asce));
      detail += alg + fmt("@%.2f SRER %.2f/%.2f dB", a, f.srer_db, r.srer_db) +
                fmt(" ASCE %.3f/%.3f; ", f.asce, r.asce);
    }
  }
  return {srer_gap <= 1.5 && asce_gap <= 0.03,
          fmt("max |SRER diff| %.2f dB, max |ASCE diff| %.4f; ", srer_gap, asce_gap) + detail};
}

Outcome binary_ordering() {
  ExperimentConfig c = desk(0.20, {"ring:2"}, {Algorithm::kDiOmp, Algorithm::kDiSp});
  c.signal = SignalKind::kBinary;
  c.smnr_db.reset();
  const auto rows = run_experiment(c);
  const double omp = row(rows, 0.20, "diomp", "ring:2").srer_db;
  const double sp = row(rows, 0.20, "disp", "ring:2").srer_db;
  return {sp > omp, fmt("DiSP %.2f dB, DiOMP %.2f dB", sp, omp)};
}

Outcome metric_sanity() {
  std::size_t out_of_range = 0, zero_mismatch = 0, srer_mismatch = 0, cells = 0, runs = 0;
  ExperimentConfig c = desk(0.15, {"ring:0", "ring:2"},
                            {Algorithm::kOmp, Algorithm::kSp, Algorithm::kFrogs, Algorithm::kDiOmp,
                             Algorithm::kDiSp, Algorithm::kDiFrogs});
  c.alphas = {0.10, 0.25};
  c.matrix_trials = c.signal_trials = 3;
  for (const CellOutput& cell : run_experiment_detailed(c).cells) {
    ++cells;
    double s = 0.0, e = 0.0;
    bool all_zero = true;
    for (const auto& r : cell.realizations) {
      s += r.signal_energy;
      e += r.error_energy;
      out_of_range += r.distortion < 0.0 || r.distortion > 1.0;
      all_zero = all_zero && r.distortion == 0.0;
    }
    out_of_range += cell.row.asce < 0.0 || cell.row.asce > 1.0;
    zero_mismatch += (cell.row.asce == 0.0) != all_zero;
    const double naive = 10.0 * std::log10(s / e);
    if (std::isinf(naive) != std::isinf(cell.row.srer_db) ||
        (!std::isinf(naive) && std::abs(naive - cell.row.srer_db) > 1e-12 * std::abs(naive))) {
      ++srer_mismatch;
    }
  }
  // Direct check of the zero-distortion condition. Supports may overlap, so the
  // true support can be smaller than the estimate; recovery means containment.
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Ensemble e = generate_ensemble(
        ModelParams::uniform(100, 30 + 5 * (s % 5), 4, 3, 3, SignalKind::kGaussian,
                             s % 2 ? std::optional<double>(20.0) : std::nullopt),
        4000 + s);
    const SimulationResult r = simulate(e, ring_topology(4, 1), DistributedAlgorithm::kDiSp);
    for (std::size_t l = 0; l < e.size(); ++l) {
      ++runs;
      const auto truth = idx(e.nodes[l].true_support());
      const auto est = idx(r.estimates[l].support);
      const double d = support_distortion(e.nodes[l].true_support(), r.estimates[l].support);
      out_of_range += d < 0.0 || d > 1.0;
      zero_mismatch += (d == 0.0) != std::includes(est.begin(), est.end(), truth.begin(), truth.end());
    }
  }
  return {out_of_range == 0 && zero_mismatch == 0 && srer_mismatch == 0,
          fmt("%.0f cells and %.0f node runs: range violations %.0f, zero-ASCE mismatches %.0f",
              cells, runs, out_of_range, zero_mismatch) +
              fmt(", SRER mismatches %.0f", srer_mismatch)};
}

Outcome iteration_profile(const std::vector<ResultRow>& sweep) {
  const double sp = row(sweep, 0.15, "disp", "ring:2").inner_mean;
  const auto rows = run_experiment([] {
    ExperimentConfig c = desk(0.10, {"ring:2"}, {Algorithm::kDiFrogs});
    c.alphas = {0.10, 0.20};
    return c;
  }());
  const double lo = row(rows, 0.10, "difrogs", "ring:2").inner_mean;
  const double hi = row(rows, 0.20, "difrogs", "ring:2").inner_mean;
  return {sp >= 3.0 && sp <= 9.0 && lo > hi,
          fmt("DiSP inner %.2f at 0.15; DiFROGS inner %.2f at 0.10, %.2f at 0.20", sp, lo, hi)};
}

Outcome determinism() {
  ExperimentConfig c = desk(0.15, {"ring:0", "ring:2", "rand:2", "watts:2,0.3"},
                            {Algorithm::kOmp, Algorithm::kSp, Algorithm::kFrogs, Algorithm::kDiOmp,
                             Algorithm::kDiSp, Algorithm::kDiFrogs});
  c.alphas = {0.15, 0.20};
  c.matrix_trials = c.signal_trials = 2;
  const std::string a = csv_without_time(run_experiment(c));
  const std::string b = csv_without_time(run_experiment(c));
  return {a == b, fmt("%.0f bytes compared", static_cast<double>(a.size()))};
}

Outcome hundred_nodes() {
  ExperimentConfig c = desk(0.15, {"watts:3,0.3"},
                            {Algorithm::kOmp, Algorithm::kSp, Algorithm::kFrogs, Algorithm::kDiOmp,
                             Algorithm::kDiSp, Algorithm::kDiFrogs});
  c.nodes = 100;
  c.matrix_trials = c.signal_trials = 2;
  const auto rows = run_experiment(c);
  bool ok = true;
  std::string detail;
  const std::pair<const char*, const char*> pairs[] = {
      {"omp", "diomp"}, {"sp", "disp"}, {"frogs", "difrogs"}};
  for (const auto& [local, dist] : pairs) {
    const double g = row(rows, 0.15, dist, "watts:3,0.3").srer_db - row(rows, 0.15, local, "ring:0").srer_db;
    ok = ok && g >= 3.0;
    detail += std::string(dist) + fmt(" +%.2f dB; ", g);
  }
  return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> ring_sweep;
  for (int d = 0; d <= 9; ++d) ring_sweep.push_back("ring:" + std::to_string(d));
  std::vector<ResultRow> sweep;

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, iteration_counts},
      {2, oracle_equivalence},
      {3, frogs_dominance},
      {4,
       [&] {
         sweep = run_experiment(desk(0.15, ring_sweep, kDistributed));
         return connectivity_gain(sweep);
       }},
      {5, centralized_gap},
      {6, fixed_vs_random},
      {7, binary_ordering},
      {8, metric_sanity},
      {9, [&] { return iteration_profile(sweep); }},
      {10, determinism},
      {11, hundred_nodes},
  };

  int failures = 0;
  std::size_t ran = 0;
  for (const auto& [id, check] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %d: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d of %zu criteria passed in %.0fs\n", static_cast<int>(ran) - failures, ran,
              total);
  return failures == 0 ? 0 : 1;
}
