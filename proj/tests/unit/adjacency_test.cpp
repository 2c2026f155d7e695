// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "srm/adjacency.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "oracles.hpp"
#include "srm/generators.hpp"
#include "srm/random.hpp"

namespace srm {
namespace {

std::vector<double> dense_multiply(const WeightedAdjacency& a,
                                   const std::vector<double>& x) {
  std::vector<double> y(a.num_nodes(), 0.0);
  for (EdgeId e = 0; e < a.num_edge_ids(); ++e) {
    const Edge& ed = a.edge(e);
    y[ed.u] += a.weight(e) * x[ed.v];
    y[ed.v] += a.weight(e) * x[ed.u];
  }
  return y;
}

TEST(AdjacencyTest, ScaledWeights) {
  const Graph g = complete_graph(4);
  const WeightedAdjacency a(g, 2.0);
  EXPECT_EQ(a.num_live_edges(), 6);
  for (EdgeId e = 0; e < 6; ++e) EXPECT_DOUBLE_EQ(a.weight(e), 0.5);
  const std::vector<double> w = {1, 2, 3, 4, 5, 6};
  const WeightedAdjacency b(g, w, 4.0);
  EXPECT_DOUBLE_EQ(b.weight(5), 1.5);
}

TEST(AdjacencyTest, MultiplyMatchesReferenceUnderRemovals) {
  const Graph g = erdos_renyi_gnp(80, 0.1, 9);
  WeightedAdjacency a(g, 1.5);
  std::vector<double> x(80);
  for (int i = 0; i < 80; ++i) x[i] = std::sin(i + 1.0);
  std::vector<double> y(80);
  SplitMix64 rng(3);
  for (int round = 0; round < 200 && a.num_live_edges() > 0; ++round) {
    a.multiply(x, y);
    const auto ref = dense_multiply(a, x);
    for (int i = 0; i < 80; ++i) ASSERT_NEAR(y[i], ref[i], 1e-12);
    if (round % 17 == 5) {
      const auto v = static_cast<NodeId>(rng.below(80));
      if (a.node_alive(v)) a.remove_node(v);
    } else {
      const auto e = static_cast<EdgeId>(rng.below(g.num_edges()));
      if (a.edge_alive(e)) a.remove_edge(e);
    }
  }
}

TEST(AdjacencyTest, BlockMultiplyMatchesColumns) {
  const Graph g = erdos_renyi_gnp(40, 0.2, 2);
  WeightedAdjacency a(g, 1.0);
  a.remove_edge(0);
  for (int cols : {1, 2, 3, 4, 8}) {
    std::vector<double> x(40 * cols), y(40 * cols);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::cos(0.3 * i);
    a.multiply_block(x.data(), y.data(), cols);
    for (int c = 0; c < cols; ++c) {
      std::vector<double> col(40);
      for (int r = 0; r < 40; ++r) col[r] = x[r * cols + c];
      const auto ref = dense_multiply(a, col);
      for (int r = 0; r < 40; ++r) EXPECT_NEAR(y[r * cols + c], ref[r], 1e-12);
    }
  }
}

TEST(AdjacencyTest, RemovalBookkeeping) {
  const Graph g = star_graph(5);
  WeightedAdjacency a(g, 1.0);
  a.remove_edge(0);
  EXPECT_FALSE(a.edge_alive(0));
  EXPECT_EQ(a.weight(0), 0.0);
  EXPECT_EQ(a.degree(0), 4);
  EXPECT_EQ(a.num_live_edges(), 4);
  a.remove_node(0);
  EXPECT_FALSE(a.node_alive(0));
  EXPECT_EQ(a.num_live_edges(), 0);
  for (NodeId v = 0; v < 6; ++v) EXPECT_EQ(a.degree(v), 0);
}

}  // namespace
}  // namespace srm
