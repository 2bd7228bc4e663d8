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

#include <benchmark/benchmark.h>

#include "digp/distributed.hpp"
#include "digp/pursuit.hpp"
#include "digp/signal_model.hpp"
#include "digp/topology.hpp"

namespace {

// N = 500, alpha = 0.16, K = 20 per node, 20 dB SMNR.
const digp::Ensemble& ensemble() {
  static const digp::Ensemble e = digp::generate_ensemble(
      digp::ModelParams::uniform(500, 80, 10, 10, 10, digp::SignalKind::kGaussian, 20.0), 7);
  return e;
}

void BM_Local(benchmark::State& state, digp::LocalSolver solver) {
  const auto& node = ensemble().nodes[0];
  for (auto _ : state) {
    benchmark::DoNotOptimize(digp::solve(solver, node.a, 20, node.y));
  }
}
BENCHMARK_CAPTURE(BM_Local, omp, digp::LocalSolver::kOmp);
BENCHMARK_CAPTURE(BM_Local, sp, digp::LocalSolver::kSp);
BENCHMARK_CAPTURE(BM_Local, frogs, digp::LocalSolver::kFrogs);

void BM_Network(benchmark::State& state, digp::DistributedAlgorithm algorithm) {
  const digp::Topology ring = digp::ring_topology(10, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(digp::simulate(ensemble(), ring, algorithm));
  }
}
BENCHMARK_CAPTURE(BM_Network, diomp, digp::DistributedAlgorithm::kDiOmp)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Network, disp, digp::DistributedAlgorithm::kDiSp)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Network, difrogs, digp::DistributedAlgorithm::kDiFrogs)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
