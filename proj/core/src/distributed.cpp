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

#include "digp/distributed.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace digp {

SupportSet vote(const VoteInput& input, bool* padded) {
  if (input.cardinality > input.dimension) {
    throw std::invalid_argument("vote: cardinality " + std::to_string(input.cardinality) +
                                " exceeds N = " + std::to_string(input.dimension));
  }
  ScoreVector scores(input.dimension);
  for (NodeId l : input.in_neighbors) {
    auto it = input.received.find(l);
    if (it == input.received.end()) {
      throw std::invalid_argument("vote: no support received from node " + std::to_string(l + 1));
    }
    supp_accumulate_into(scores, it->second);
  }
  Vector as_real(static_cast<Eigen::Index>(input.dimension));
  std::size_t voted = 0;
  for (std::size_t i = 0; i < input.dimension; ++i) {
    as_real[static_cast<Eigen::Index>(i)] = scores[i];
    if (scores[i] > 0) ++voted;
  }
  if (padded) *padded = voted < input.cardinality;
  return max_indices(as_real, input.cardinality);
}

std::string_view name(DistributedAlgorithm a) {
  switch (a) {
    case DistributedAlgorithm::kDiOmp:
      return "diomp";
    case DistributedAlgorithm::kDiSp:
      return "disp";
    case DistributedAlgorithm::kDiFrogs:
      return "difrogs";
  }
  return "?";
}

LocalSolver local_solver(DistributedAlgorithm a) {
  switch (a) {
    case DistributedAlgorithm::kDiOmp:
      return LocalSolver::kOmp;
    case DistributedAlgorithm::kDiSp:
      return LocalSolver::kSp;
    case DistributedAlgorithm::kDiFrogs:
      return LocalSolver::kFrogs;
  }
  throw std::invalid_argument("unknown distributed algorithm");
}

namespace {

void run_solver(NodeState& state, LocalSolver solver, const NodeProblem& problem,
                std::size_t k_max, const SupportSet& seed) {
  state.current = solve(solver, problem.a, k_max, problem.y, seed);
  ++state.solver_calls;
  state.inner_iterations += state.current.iterations;
  state.last_inner_iterations = state.current.iterations;
}

VoteInput make_vote_input(const NodeState& state, const NodeProblem& problem, std::size_t q,
                          NodeId self, const std::vector<NodeId>& in_neighbors,
                          const std::map<NodeId, SupportSet>& inbox) {
  VoteInput in{in_neighbors, inbox, q, static_cast<std::size_t>(problem.a.cols())};
  in.received[self] = state.current.support;
  return in;
}

}  // namespace

NodeState init_node(DistributedAlgorithm algorithm, const NodeProblem& problem,
                    std::size_t k_max, const std::vector<NodeId>& external_in) {
  NodeState s;
  run_solver(s, local_solver(algorithm), problem, k_max, SupportSet{});
  s.previous = s.current;
  for (NodeId l : external_in) s.received[l] = SupportSet{};
  s.received_old = s.received;
  return s;
}

const PursuitResult& reported(DistributedAlgorithm algorithm, const NodeState& state) {
  if (algorithm == DistributedAlgorithm::kDiOmp) return state.current;
  return state.current.residual_norm < state.previous.residual_norm ? state.current
                                                                     : state.previous;
}

void diomp_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                      std::size_t round, NodeId self, const std::vector<NodeId>& in_neighbors,
                      const std::map<NodeId, SupportSet>& inbox) {
  state.round = round;
  state.received_old = state.received;
  for (const auto& [from, support] : inbox) state.received[from] = support;
  const SupportSet common =
      vote(make_vote_input(state, problem, round, self, in_neighbors, state.received));
  run_solver(state, LocalSolver::kOmp, problem, k_max, common);
}

void begin_reversible_round(NodeState& state) {
  if (state.converged) return;
  if (state.current.residual_norm > state.previous.residual_norm) state.current = state.previous;
  state.previous = state.current;
  state.received_old = state.received;
}

void complete_reversible_round(NodeState& state, LocalSolver solver, const NodeProblem& problem,
                               std::size_t k_max, std::size_t k_common, NodeId self,
                               const std::vector<NodeId>& in_neighbors,
                               const std::map<NodeId, SupportSet>& inbox) {
  if (state.converged) return;
  ++state.round;
  for (const auto& [from, support] : inbox) state.received[from] = support;
  const SupportSet common =
      vote(make_vote_input(state, problem, k_common, self, in_neighbors, state.received));
  run_solver(state, solver, problem, k_max, common);
  if (state.current.residual_norm >= state.previous.residual_norm &&
      state.received == state.received_old) {
    state.converged = true;
    state.converged_round = state.round;
  }
}

void disp_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                     std::size_t k_common, NodeId self, const std::vector<NodeId>& in_neighbors,
                     const std::map<NodeId, SupportSet>& inbox) {
  begin_reversible_round(state);
  complete_reversible_round(state, LocalSolver::kSp, problem, k_max, k_common, self,
                            in_neighbors, inbox);
}

void difrogs_node_round(NodeState& state, const NodeProblem& problem, std::size_t k_max,
                        std::size_t k_common, NodeId self,
                        const std::vector<NodeId>& in_neighbors,
                        const std::map<NodeId, SupportSet>& inbox) {
  begin_reversible_round(state);
  complete_reversible_round(state, LocalSolver::kFrogs, problem, k_max, k_common, self,
                            in_neighbors, inbox);
}

std::vector<RoundRecord> RoundTrace::for_node(NodeId node) const {
  std::vector<RoundRecord> out;
  for (const auto& r : records_) {
    if (r.node == node) out.push_back(r);
  }
  return out;
}

bool operator==(const RoundTrace& a, const RoundTrace& b) {
  if (a.records_.size() != b.records_.size()) return false;
  for (std::size_t i = 0; i < a.records_.size(); ++i) {
    const auto& x = a.records_[i];
    const auto& y = b.records_[i];
    if (x.node != y.node || x.round != y.round || x.eta != y.eta ||
        x.support_overlap != y.support_overlap || x.inner_iterations != y.inner_iterations) {
      return false;
    }
  }
  return true;
}

void write_trace_header(std::ostream& out) {
  out << "run_id,node,round,eta,support_overlap,inner_iters\n";
}

void write_trace_csv(std::ostream& out, const RoundTrace& trace, std::uint64_t run_id) {
  char eta[32];
  for (const auto& r : trace.records()) {
    std::snprintf(eta, sizeof eta, "%.17g", r.eta);
    out << run_id << ',' << r.node + 1 << ',' << r.round << ',' << eta << ','
        << r.support_overlap << ',' << r.inner_iterations << '\n';
  }
}

SimulationResult simulate(const Ensemble& ensemble, const Topology& topology,
                          DistributedAlgorithm algorithm, const SimulationLimits& limits) {
  const std::size_t nodes = ensemble.size();
  if (topology.size() != nodes) {
    throw std::invalid_argument("simulate: topology has " + std::to_string(topology.size()) +
                                " nodes but ensemble has " + std::to_string(nodes));
  }
  std::vector<SupportSet> truth(nodes);
  std::vector<std::vector<NodeId>> in_neighbors(nodes);
  std::vector<NodeState> states;
  states.reserve(nodes);
  for (NodeId l = 0; l < nodes; ++l) {
    truth[l] = ensemble.nodes[l].true_support();
    in_neighbors[l] = topology.in_neighbors(l);
    states.push_back(init_node(algorithm, ensemble.nodes[l], ensemble.k_max(l),
                               topology.external_in(l)));
  }

  SimulationResult out;
  auto record = [&](std::size_t round) {
    for (NodeId l = 0; l < nodes; ++l) {
      const NodeState& s = states[l];
      const PursuitResult& r = reported(algorithm, s);
      const bool idle = s.converged && s.converged_round < round;
      out.trace.append({l, round, r.residual_norm, r.support.intersection_size(truth[l]),
                        idle ? 0 : s.last_inner_iterations});
    }
  };
  record(0);

  // Double-buffered: the board is filled completely before anyone reads it.
  std::vector<SupportSet> board(nodes);
  auto inbox_of = [&](NodeId l) {
    std::map<NodeId, SupportSet> inbox;
    for (NodeId from : topology.external_in(l)) inbox[from] = board[from];
    return inbox;
  };

  if (algorithm == DistributedAlgorithm::kDiOmp) {
    for (std::size_t k = 1; k <= ensemble.k_common; ++k) {
      for (NodeId l = 0; l < nodes; ++l) board[l] = states[l].current.support;
      for (NodeId l = 0; l < nodes; ++l) {
        diomp_node_round(states[l], ensemble.nodes[l], ensemble.k_max(l), k, l, in_neighbors[l],
                         inbox_of(l));
      }
      record(k);
    }
    out.rounds = ensemble.k_common;
  } else {
    const LocalSolver solver = local_solver(algorithm);
    auto all_converged = [&] {
      for (const auto& s : states) {
        if (!s.converged) return false;
      }
      return true;
    };
    std::size_t round = 0;
    while (!all_converged()) {
      if (round == limits.max_rounds) {
        out.converged = false;
        break;
      }
      ++round;
      for (auto& s : states) begin_reversible_round(s);
      for (NodeId l = 0; l < nodes; ++l) {
        board[l] = states[l].converged ? reported(algorithm, states[l]).support
                                       : states[l].current.support;
      }
      for (NodeId l = 0; l < nodes; ++l) {
        complete_reversible_round(states[l], solver, ensemble.nodes[l], ensemble.k_max(l),
                                  ensemble.k_common, l, in_neighbors[l], inbox_of(l));
      }
      record(round);
    }
    out.rounds = round;
  }

  for (NodeId l = 0; l < nodes; ++l) {
    out.estimates.push_back(reported(algorithm, states[l]));
    if (algorithm == DistributedAlgorithm::kDiOmp) {
      out.outer_rounds.push_back(ensemble.k_common);
    } else {
      out.outer_rounds.push_back(states[l].converged ? states[l].converged_round : out.rounds);
    }
    out.solver_calls.push_back(states[l].solver_calls);
    out.inner_iterations.push_back(states[l].inner_iterations);
  }
  return out;
}

}  // namespace digp
