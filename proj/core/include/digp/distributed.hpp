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
#include <iosfwd>
#include <map>
#include <string_view>
#include <vector>

#include "digp/pursuit.hpp"
#include "digp/signal_model.hpp"
#include "digp/topology.hpp"

namespace digp {

struct VoteInput {
  std::vector<NodeId> in_neighbors;           // must contain the voting node
  std::map<NodeId, SupportSet> received;      // one support per in-neighbor
  std::size_t cardinality = 0;                // q
  std::size_t dimension = 0;                  // N
};

/// Majority vote over received supports: the q indices that occur most
/// often, ties to the lowest index. If fewer than q indices received any
/// vote the result is padded with zero-score indices and `padded` is set.
SupportSet vote(const VoteInput& input, bool* padded = nullptr);

enum class DistributedAlgorithm { kDiOmp, kDiSp, kDiFrogs };

std::string_view name(DistributedAlgorithm a);
LocalSolver local_solver(DistributedAlgorithm a);

/// Per-node state of a distributed run.
struct NodeState {
  PursuitResult current;
  PursuitResult previous;                     // best-so-far ("old") triple
  std::map<NodeId, SupportSet> received;      // external in-neighbors only
  std::map<NodeId, SupportSet> received_old;
  std::size_t round = 0;
  bool converged = false;
  std::size_t converged_round = 0;
  std::size_t solver_calls = 0;
  std::size_t inner_iterations = 0;           // summed over solver calls
  std::size_t last_inner_iterations = 0;
};

/// Runs the local solver with an empty seed and clears the inbox.
NodeState init_node(DistributedAlgorithm algorithm, const NodeProblem& problem,
                    std::size_t k_max, const std::vector<NodeId>& external_in);

/// Estimate the node currently stands behind: for the reversible variants
/// the better of `current` and `previous`, otherwise `current`.
const PursuitResult& reported(DistributedAlgorithm algorithm, const NodeState& state);

/// One DiOMP round: vote a common support of size `round` from `inbox`
/// (external in-neighbor supports) plus the node's own estimate, then rerun
/// mod_omp from it.
void diomp_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                      std::size_t round, NodeId self, const std::vector<NodeId>& in_neighbors,
                      const std::map<NodeId, SupportSet>& inbox);

/// First half of a DiSP/DiFROGS round: revert to the saved triple if the last
/// solve made things worse, then save the current triple and inbox. The
/// node's support is transmitted after this step.
void begin_reversible_round(NodeState& state);

/// Second half: receive, vote a full-size common support, rerun the local
/// solver from it and test the stopping rule.
void complete_reversible_round(NodeState& state, LocalSolver solver, const NodeProblem& problem,
                               std::size_t k_max, std::size_t k_common, NodeId self,
                               const std::vector<NodeId>& in_neighbors,
                               const std::map<NodeId, SupportSet>& inbox);

/// Both halves; convenient when the inbox is already known.
void disp_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                     std::size_t k_common, NodeId self, const std::vector<NodeId>& in_neighbors,
                     const std::map<NodeId, SupportSet>& inbox);
void difrogs_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                        std::size_t k_common, NodeId self,
                        const std::vector<NodeId>& in_neighbors,
                        const std::map<NodeId, SupportSet>& inbox);

struct RoundRecord {
  NodeId node = 0;
  std::size_t round = 0;       // 0 is the initialization
  double eta = 0.0;            // reported residual norm
  std::size_t support_overlap = 0;
  std::size_t inner_iterations = 0;
};

/// Append-only per-node, per-round log of a simulation.
class RoundTrace {
 public:
  void append(const RoundRecord& r) { records_.push_back(r); }
  const std::vector<RoundRecord>& records() const noexcept { return records_; }
  std::vector<RoundRecord> for_node(NodeId node) const;

  friend bool operator==(const RoundTrace& a, const RoundTrace& b);

 private:
  std::vector<RoundRecord> records_;
};

/// CSV with header run_id,node,round,eta,support_overlap,inner_iters.
void write_trace_header(std::ostream& out);
void write_trace_csv(std::ostream& out, const RoundTrace& trace, std::uint64_t run_id);

struct SimulationLimits {
  std::size_t max_rounds = 50;
};

struct SimulationResult {
  std::vector<PursuitResult> estimates;   // reported estimate per node
  std::vector<std::size_t> outer_rounds;  // rounds each node was active
  std::vector<std::size_t> solver_calls;
  std::vector<std::size_t> inner_iterations;
  RoundTrace trace;
  std::size_t rounds = 0;
  bool converged = true;  // false when the round cap stopped the run
};

/// Synchronous lockstep execution on `topology`: every round all nodes
/// transmit along out-edges, then all vote and re-solve. DiOMP stops after
/// exactly K^(c) rounds; DiSP/DiFROGS stop once every node has converged,
/// converged nodes re-broadcasting their final support meanwhile.
SimulationResult simulate(const Ensemble& ensemble, const Topology& topology,
                          DistributedAlgorithm algorithm, const SimulationLimits& limits = {});

}  // namespace digp
