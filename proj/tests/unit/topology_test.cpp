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

#include <gtest/gtest.h>

#include <queue>
#include <sstream>
#include <stdexcept>

#include "digp/topology.hpp"

namespace digp {
namespace {

bool strongly_connected(const Topology& t) {
  for (NodeId s = 0; s < t.size(); ++s) {
    std::vector<bool> seen(t.size(), false);
    std::queue<NodeId> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const NodeId u = q.front();
      q.pop();
      for (NodeId v : t.external_out(u)) {
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
      }
    }
    for (bool b : seen) {
      if (!b) return false;
    }
  }
  return true;
}

TEST(Ring, DegreeOneSendsToNextNode) {
  const Topology t = ring_topology(10, 1);
  for (NodeId l = 0; l < 10; ++l) {
    EXPECT_EQ(t.external_out(l), (std::vector<NodeId>{(l + 1) % 10}));
  }
  EXPECT_TRUE(strongly_connected(t));
  EXPECT_EQ(t.label(), "ring:1");
}

TEST(Ring, DisconnectedAndFullyConnected) {
  const Topology c0 = ring_topology(10, 0);
  for (NodeId l = 0; l < 10; ++l) {
    EXPECT_EQ(c0.out_neighbors(l), (std::vector<NodeId>{l}));
    EXPECT_EQ(c0.in_neighbors(l), (std::vector<NodeId>{l}));
  }
  const Topology c9 = ring_topology(10, 9);
  for (NodeId l = 0; l < 10; ++l) EXPECT_EQ(c9.in_neighbors(l).size(), 10u);
  EXPECT_THROW(ring_topology(10, 10), std::invalid_argument);
}

TEST(Ring, EdgeSetsAreNested) {
  for (std::size_t d = 0; d + 1 < 10; ++d) {
    const Topology a = ring_topology(10, d);
    const Topology b = ring_topology(10, d + 1);
    for (NodeId l = 0; l < 10; ++l) {
      for (NodeId to : a.external_out(l)) EXPECT_TRUE(b.has_edge(l, to));
    }
    EXPECT_EQ(b.edge_count(), 10 * (d + 1));
  }
}

TEST(Ring, WrapsAroundForLastNodes) {
  const Topology t = ring_topology(5, 2);
  EXPECT_EQ(t.external_out(4), (std::vector<NodeId>{0, 1}));
  EXPECT_EQ(t.external_in(0), (std::vector<NodeId>{3, 4}));
}

TEST(Neighbors, SelfIsAlwaysIncluded) {
  CounterRng rng(1);
  for (const Topology& t : {ring_topology(7, 3), random_topology(7, 3, rng),
                            watts_strogatz(9, 2, 0.5, rng)}) {
    for (NodeId l = 0; l < t.size(); ++l) {
      const auto in = t.in_neighbors(l);
      const auto out = t.out_neighbors(l);
      EXPECT_NE(std::find(in.begin(), in.end(), l), in.end());
      EXPECT_NE(std::find(out.begin(), out.end(), l), out.end());
      EXPECT_FALSE(t.has_edge(l, l));
    }
  }
}

TEST(Random, ExactOutDegreeIncludingRingEdge) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    CounterRng rng = CounterRng::stream(s, {5});
    const Topology t = random_topology(10, 3, rng);
    std::size_t in_total = 0;
    for (NodeId l = 0; l < 10; ++l) {
      EXPECT_EQ(t.external_out(l).size(), 3u);
      EXPECT_TRUE(t.has_edge(l, (l + 1) % 10));
      in_total += t.external_in(l).size();
    }
    EXPECT_EQ(in_total, 30u);
    EXPECT_TRUE(strongly_connected(t));
  }
}

TEST(Random, FullDegreeEqualsFullRing) {
  CounterRng rng(2);
  EXPECT_EQ(random_topology(10, 9, rng), ring_topology(10, 9));
}

TEST(Random, RejectsDegreeBelowTwoAndIsDeterministic) {
  CounterRng rng(3);
  EXPECT_THROW(random_topology(10, 1, rng), std::invalid_argument);
  EXPECT_THROW(random_topology(10, 10, rng), std::invalid_argument);
  CounterRng a(4), b(4);
  EXPECT_EQ(random_topology(10, 2, a), random_topology(10, 2, b));
}

TEST(WattsStrogatz, NoRewiringIsRegularLattice) {
  CounterRng rng(5);
  const Topology t = watts_strogatz(12, 2, 0.0, rng);
  for (NodeId l = 0; l < 12; ++l) {
    EXPECT_EQ(t.external_out(l).size(), 4u);
    EXPECT_TRUE(t.has_edge(l, (l + 1) % 12));
    EXPECT_TRUE(t.has_edge(l, (l + 2) % 12));
    EXPECT_TRUE(t.has_edge(l, (l + 10) % 12));
  }
}

TEST(WattsStrogatz, RewiringPreservesEdgeCountAndSymmetry) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    for (double p : {0.3, 1.0}) {
      CounterRng rng = CounterRng::stream(s, {6});
      const Topology t = watts_strogatz(100, 3, p, rng);
      EXPECT_EQ(t.edge_count(), 2u * 100u * 3u);
      for (NodeId l = 0; l < 100; ++l) {
        for (NodeId to : t.external_out(l)) EXPECT_TRUE(t.has_edge(to, l));
      }
    }
  }
}

TEST(WattsStrogatz, RewiringChangesTheLattice) {
  CounterRng rng(7);
  const Topology t = watts_strogatz(100, 3, 0.3, rng);
  CounterRng rng0(7);
  EXPECT_FALSE(t == watts_strogatz(100, 3, 0.0, rng0));
}

TEST(WattsStrogatz, ParameterChecks) {
  CounterRng rng(8);
  EXPECT_THROW(watts_strogatz(10, 0, 0.1, rng), std::invalid_argument);
  EXPECT_THROW(watts_strogatz(10, 5, 0.1, rng), std::invalid_argument);
  EXPECT_THROW(watts_strogatz(10, 2, 1.5, rng), std::invalid_argument);
}

TEST(TextFormat, RoundTripOneBased) {
  const Topology t = ring_topology(4, 2);
  const std::string text = to_text(t);
  EXPECT_EQ(text, "1: 2 3\n2: 3 4\n3: 1 4\n4: 1 2\n");
  std::istringstream in(text);
  EXPECT_EQ(read_topology(in), t);
}

TEST(TextFormat, RejectsMalformedInput) {
  std::istringstream no_colon("1 2 3\n");
  EXPECT_THROW(read_topology(no_colon), std::runtime_error);
  std::istringstream zero("1: 0\n2:\n");
  EXPECT_THROW(read_topology(zero), std::runtime_error);
  std::istringstream order("2: 1\n1: 2\n");
  EXPECT_THROW(read_topology(order), std::runtime_error);
  std::istringstream self("1: 1\n2:\n");
  EXPECT_THROW(read_topology(self), std::invalid_argument);
  std::istringstream range("1: 3\n2:\n");
  EXPECT_THROW(read_topology(range), std::invalid_argument);
}

}  // namespace
}  // namespace digp
