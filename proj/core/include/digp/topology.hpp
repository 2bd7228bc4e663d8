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

#include <iosfwd>
#include <string>
#include <vector>

#include "digp/random.hpp"

namespace digp {

using NodeId = std::size_t;

/// Directed connectivity among L nodes.
///
/// Only external edges are stored; the neighbor queries add the node itself,
/// since every node always votes with its own estimate.
class Topology {
 public:
  Topology() = default;
  /// `external_out[l]` lists destinations of l. Throws on self-loops,
  /// duplicates or out-of-range ids.
  explicit Topology(std::vector<std::vector<NodeId>> external_out, std::string label = {});

  std::size_t size() const noexcept { return out_.size(); }
  const std::string& label() const noexcept { return label_; }

  const std::vector<NodeId>& external_out(NodeId l) const { return out_.at(l); }
  const std::vector<NodeId>& external_in(NodeId l) const { return in_.at(l); }
  /// L_out(l), including l.
  std::vector<NodeId> out_neighbors(NodeId l) const;
  /// L_in(l), including l.
  std::vector<NodeId> in_neighbors(NodeId l) const;

  bool has_edge(NodeId from, NodeId to) const;
  std::size_t edge_count() const noexcept;

  friend bool operator==(const Topology& a, const Topology& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::vector<NodeId>> out_;
  std::vector<std::vector<NodeId>> in_;
  std::string label_;
};

/// C_d: node l sends to l+1, ..., l+d (mod L). d = 0 is the disconnected
/// baseline and d = L-1 the fully connected network.
Topology ring_topology(std::size_t nodes, std::size_t degree);

/// C_{d,rand}: the degree-1 ring plus d-1 distinct random extra out-edges
/// per node.
Topology random_topology(std::size_t nodes, std::size_t degree, CounterRng& rng);

/// Watts-Strogatz small world: ring lattice with `neighbors` links on each
/// side, far endpoints rewired with probability `rewire`. Each undirected
/// link becomes a pair of directed edges.
Topology watts_strogatz(std::size_t nodes, std::size_t neighbors, double rewire,
                        CounterRng& rng);

/// One line per node, one-based: "node: out1 out2 ...". Self is implicit.
void write_topology(std::ostream& out, const Topology& t);
Topology read_topology(std::istream& in);
std::string to_text(const Topology& t);

}  // namespace digp
