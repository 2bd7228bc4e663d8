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

#include "digp/topology.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace digp {

Topology::Topology(std::vector<std::vector<NodeId>> external_out, std::string label)
    : out_(std::move(external_out)), in_(out_.size()), label_(std::move(label)) {
  const std::size_t n = out_.size();
  for (NodeId l = 0; l < n; ++l) {
    auto& dst = out_[l];
    std::sort(dst.begin(), dst.end());
    if (std::adjacent_find(dst.begin(), dst.end()) != dst.end()) {
      throw std::invalid_argument("topology: duplicate edge from node " + std::to_string(l + 1));
    }
    for (NodeId to : dst) {
      if (to >= n) throw std::invalid_argument("topology: destination out of range");
      if (to == l) {
        throw std::invalid_argument("topology: explicit self-loop at node " +
                                    std::to_string(l + 1));
      }
      in_[to].push_back(l);
    }
  }
}

std::vector<NodeId> Topology::out_neighbors(NodeId l) const {
  std::vector<NodeId> v = out_.at(l);
  v.insert(std::upper_bound(v.begin(), v.end(), l), l);
  return v;
}

std::vector<NodeId> Topology::in_neighbors(NodeId l) const {
  std::vector<NodeId> v = in_.at(l);
  v.insert(std::upper_bound(v.begin(), v.end(), l), l);
  return v;
}

bool Topology::has_edge(NodeId from, NodeId to) const {
  const auto& dst = out_.at(from);
  return std::binary_search(dst.begin(), dst.end(), to);
}

std::size_t Topology::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& dst : out_) n += dst.size();
  return n;
}

Topology ring_topology(std::size_t nodes, std::size_t degree) {
  if (nodes == 0) throw std::invalid_argument("ring_topology: need at least one node");
  if (degree >= nodes) {
    throw std::invalid_argument("ring_topology: degree " + std::to_string(degree) +
                                " must be below L = " + std::to_string(nodes));
  }
  std::vector<std::vector<NodeId>> out(nodes);
  for (NodeId l = 0; l < nodes; ++l) {
    for (std::size_t j = 1; j <= degree; ++j) out[l].push_back((l + j) % nodes);
  }
  return Topology(std::move(out), "ring:" + std::to_string(degree));
}

Topology random_topology(std::size_t nodes, std::size_t degree, CounterRng& rng) {
  if (degree < 2) throw std::invalid_argument("random_topology: degree must be at least 2");
  if (degree >= nodes) {
    throw std::invalid_argument("random_topology: degree " + std::to_string(degree) +
                                " must be below L = " + std::to_string(nodes));
  }
  std::vector<std::vector<NodeId>> out(nodes);
  for (NodeId l = 0; l < nodes; ++l) {
    const NodeId next = (l + 1) % nodes;
    std::vector<NodeId> free;
    for (NodeId v = 0; v < nodes; ++v) {
      if (v != l && v != next) free.push_back(v);
    }
    out[l].push_back(next);
    for (std::size_t pick : sample_without_replacement(rng, free.size(), degree - 1)) {
      out[l].push_back(free[pick]);
    }
  }
  return Topology(std::move(out), "rand:" + std::to_string(degree));
}

Topology watts_strogatz(std::size_t nodes, std::size_t neighbors, double rewire,
                        CounterRng& rng) {
  if (neighbors < 1 || 2 * neighbors > nodes - 1 || nodes < 3) {
    throw std::invalid_argument("watts_strogatz: need 1 <= q <= (L-1)/2, got q = " +
                                std::to_string(neighbors) + ", L = " + std::to_string(nodes));
  }
  if (!(rewire >= 0.0 && rewire <= 1.0)) {
    throw std::invalid_argument("watts_strogatz: rewiring probability must lie in [0, 1]");
  }
  std::vector<std::set<NodeId>> adj(nodes);
  for (NodeId l = 0; l < nodes; ++l) {
    for (std::size_t j = 1; j <= neighbors; ++j) {
      adj[l].insert((l + j) % nodes);
      adj[(l + j) % nodes].insert(l);
    }
  }
  for (std::size_t j = 1; j <= neighbors; ++j) {
    for (NodeId u = 0; u < nodes; ++u) {
      const NodeId v = (u + j) % nodes;
      if (uniform01(rng) >= rewire) continue;
      if (adj[u].size() >= nodes - 1) continue;  // nowhere to go
      NodeId w = 0;
      do {
        w = uniform_below(rng, nodes);
      } while (w == u || adj[u].count(w) != 0);
      adj[u].erase(v);
      adj[v].erase(u);
      adj[u].insert(w);
      adj[w].insert(u);
    }
  }
  std::vector<std::vector<NodeId>> out(nodes);
  for (NodeId l = 0; l < nodes; ++l) out[l].assign(adj[l].begin(), adj[l].end());
  std::ostringstream label;
  label << "watts:" << neighbors << ',' << rewire;
  return Topology(std::move(out), label.str());
}

void write_topology(std::ostream& out, const Topology& t) {
  for (NodeId l = 0; l < t.size(); ++l) {
    out << l + 1 << ':';
    for (NodeId to : t.external_out(l)) out << ' ' << to + 1;
    out << '\n';
  }
}

Topology read_topology(std::istream& in) {
  std::vector<std::vector<NodeId>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      throw std::runtime_error("topology line " + std::to_string(line_no) + ": missing ':'");
    }
    const std::size_t node = std::stoul(line.substr(0, colon));
    if (node != out.size() + 1) {
      throw std::runtime_error("topology line " + std::to_string(line_no) +
                               ": expected node " + std::to_string(out.size() + 1));
    }
    std::istringstream rest(line.substr(colon + 1));
    std::vector<NodeId> dst;
    std::size_t to = 0;
    while (rest >> to) {
      if (to == 0) throw std::runtime_error("topology: node ids are one-based");
      dst.push_back(to - 1);
    }
    if (!rest.eof()) {
      throw std::runtime_error("topology line " + std::to_string(line_no) + ": bad node id");
    }
    out.push_back(std::move(dst));
  }
  return Topology(std::move(out));
}

std::string to_text(const Topology& t) {
  std::ostringstream os;
  write_topology(os, t);
  return os.str();
}

}  // namespace digp
