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

#include "srm/walks.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "srm/adjacency.hpp"
#include "srm/errors.hpp"
#include "srm/generators.hpp"
#include "srm/random.hpp"

namespace srm {
namespace {

double rel(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

TEST(WalksTest, TableMatchesExactIntegerPowers) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const Graph g = erdos_renyi_gnp(12, 0.35, seed);
    for (int k : {2, 4, 6, 8}) {
      const WalkTable t = walk_table_matrix(g, k, 1.0);
      EXPECT_NEAR(t.total_rooted, static_cast<double>(oracle::trace_power(g, k)),
                  1e-9 * t.total_rooted + 1e-9);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge ed = g.edge(e);
        EXPECT_DOUBLE_EQ(t.per_edge[e],
                         static_cast<double>(oracle::power_entry(g, k - 1, ed.u, ed.v)));
      }
      for (NodeId v = 0; v < g.num_nodes(); ++v) {
        EXPECT_DOUBLE_EQ(t.per_node[v],
                         static_cast<double>(oracle::power_entry(g, k, v, v)));
      }
    }
  }
}

TEST(WalksTest, TraceEqualsEigenvaluePowerSum) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = erdos_renyi_gnp(45, 0.12, seed);
    const Eigen::MatrixXd a = oracle::dense_adjacency(g);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    const double s = 2.5;
    for (int k : {4, 10, 20}) {
      double sum = 0.0;
      for (int i = 0; i < es.eigenvalues().size(); ++i) {
        sum += std::pow(es.eigenvalues()[i] / s, k);
      }
      EXPECT_LT(rel(walk_table_matrix(g, k, s).total_rooted, sum), 1e-6);
    }
  }
}

TEST(WalksTest, ScalingConsistency) {
  const Graph g = barabasi_albert(60, 2, 3);
  const int k = 8;
  const double s = 3.0;
  const WalkTable one = walk_table_matrix(g, k, 1.0);
  const WalkTable scaled = walk_table_matrix(g, k, s);
  EXPECT_LT(rel(scaled.total_rooted, one.total_rooted / std::pow(s, k)), 1e-9);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    EXPECT_LT(rel(scaled.per_edge[e], one.per_edge[e] / std::pow(s, k - 1)), 1e-9);
  }
}

TEST(WalksTest, LiveOperatorMatchesGraphTable) {
  // Dense and sparse-column paths are both exercised by the size range.
  for (NodeId n : {20, 150}) {
    const Graph g = erdos_renyi_gnp(n, 6.0 / n, 7);
    std::vector<Edge> removed;
    WeightedAdjacency a(g, 2.0);
    for (EdgeId e = 0; e < g.num_edges(); e += 3) {
      a.remove_edge(e);
      removed.push_back(g.edge(e));
    }
    const Graph h = remove_edges(g, removed);
    const WalkTable live = walk_table(a, 10);
    const WalkTable ref = walk_table_matrix(h, 10, 2.0);
    EXPECT_LT(rel(live.total_rooted, ref.total_rooted), 1e-9);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto id = h.find_edge(g.edge(e).u, g.edge(e).v);
      if (!id) {
        EXPECT_EQ(live.per_edge[e], 0.0);
      } else {
        EXPECT_LT(rel(live.per_edge[e], ref.per_edge[*id]), 1e-9);
      }
    }
  }
}

TEST(WalksTest, DpAgreesWithMatrixAndIsMonotone) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = erdos_renyi_gnp(30, 0.15, seed);
    if (g.num_edges() < 5) continue;
    const WalkTable t = walk_table_matrix(g, 6, 1.5);
    std::vector<Edge> drop;
    for (EdgeId e = 1; e < g.num_edges(); e += 4) drop.push_back(g.edge(e));
    const Graph sub = remove_edges(g, drop);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const double dp = walk_count_dp(g, g.edge(e), 6, 1.5);
      EXPECT_LT(rel(dp, t.per_edge[e]), 1e-12);
      if (sub.has_edge(g.edge(e).u, g.edge(e).v)) {
        EXPECT_LE(walk_count_dp(sub, g.edge(e), 6, 1.5), dp * (1 + 1e-12));
      }
    }
  }
  EXPECT_THROW(walk_count_dp(path_graph(3), Edge{0, 2}, 4, 1.0), ValidationError);
}

TEST(WalksTest, TraceDropsAreExact) {
  const Graph g = erdos_renyi_gnp(40, 0.12, 5);
  WeightedAdjacency a(g, 2.0);
  SplitMix64 rng(1);
  double before = walk_table(a, 8).total_rooted;
  for (int i = 0; i < 10; ++i) {
    const auto e = static_cast<EdgeId>(rng.below(g.num_edges()));
    if (!a.edge_alive(e)) continue;
    const double w = a.weight(e);
    a.remove_edge(e);
    const double after = walk_table(a, 8).total_rooted;
    EXPECT_NEAR(trace_drop_edge(a, g.edge(e).u, g.edge(e).v, w, 8), before - after,
                1e-9 * before);
    before = after;
  }
  const NodeId v = 3;
  std::vector<NodeId> nbrs;
  std::vector<double> w;
  const auto inc = g.incident_edges(v);
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (!a.edge_alive(inc[i])) continue;
    nbrs.push_back(g.neighbors(v)[i]);
    w.push_back(a.weight(inc[i]));
  }
  a.remove_node(v);
  const double after = walk_table(a, 8).total_rooted;
  EXPECT_NEAR(trace_drop_node(a, nbrs, w, 8), before - after, 1e-9 * before);
}

TEST(WalksTest, RejectsBadArguments) {
  EXPECT_THROW(walk_table_matrix(complete_graph(3), 3, 1.0), ValidationError);
  EXPECT_THROW(walk_table_matrix(complete_graph(3), 0, 1.0), ValidationError);
  EXPECT_THROW(walk_table_matrix(complete_graph(3), 4, 0.0), ValidationError);
  EXPECT_THROW(walk_table_matrix(complete_graph(40), 400, 0.01), NumericOverflowError);
}

TEST(WalksTest, ColumnIsPowerTimesUnitVector) {
  const Graph g = cycle_graph(6);
  const WeightedAdjacency a(g, 1.0);
  std::vector<double> out;
  walk_column(a, 0, 4, out);
  for (NodeId v = 0; v < 6; ++v) {
    EXPECT_DOUBLE_EQ(out[v], static_cast<double>(oracle::power_entry(g, 4, 0, v)));
  }
}

}  // namespace
}  // namespace srm
