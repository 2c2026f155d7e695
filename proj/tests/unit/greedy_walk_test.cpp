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

#include "srm/greedy_walk.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "srm/brute_force.hpp"
#include "srm/errors.hpp"
#include "srm/generators.hpp"
#include "srm/io.hpp"
#include "srm/spectral.hpp"

namespace srm {
namespace {

GreedyConfig config(double t, int k = 0) {
  GreedyConfig c;
  c.threshold = t;
  c.walk_length = k;
  return c;
}

double residual_lambda(const Graph& g, const RemovalPlan& p) {
  return oracle::dense_lambda(residual_graph(g, p));
}

TEST(GreedyWalkTest, AutomaticWalkLength) {
  GreedyConfig c = config(1.0);
  const int k = resolve_walk_length(c, 100);
  EXPECT_EQ(k % 2, 0);
  EXPECT_GE(k, std::log(100.0) / std::log(1.0 + 0.05 / 3));
  EXPECT_LT(k - 2, std::log(100.0) / std::log(1.0 + 0.05 / 3));
  c.walk_length = 6;
  EXPECT_EQ(resolve_walk_length(c, 100), 6);
  c.walk_length = 5;
  EXPECT_THROW(resolve_walk_length(c, 100), ValidationError);
}

TEST(GreedyWalkTest, BackendSelection) {
  const GreedyConfig c;
  EXPECT_EQ(resolve_backend(c, 100, 400), CountingBackend::kDpLazy);
  EXPECT_EQ(resolve_backend(c, 100, 401), CountingBackend::kMatrix);
  EXPECT_EQ(resolve_backend(c, 5000, 100000), CountingBackend::kDpLazy);
}

TEST(GreedyWalkTest, AlreadyBelowThreshold) {
  const RemovalPlan p = greedy_walk_edges(star_graph(9), config(3.5));
  EXPECT_EQ(p.size(), 0u);
  EXPECT_FALSE(p.exhausted);
  EXPECT_EQ(greedy_walk_nodes(star_graph(9), config(3.5)).size(), 0u);
}

TEST(GreedyWalkTest, K4AgainstBruteForce) {
  const Graph g = complete_graph(4);
  const RemovalPlan p = greedy_walk_edges(g, config(2.5));
  const int k = p.walk_length;
  EXPECT_LE(residual_lambda(g, p), 2.5 * 1.05 + 1e-9);
  const BruteForceResult opt = brute_force_srm(g, 2.5, PlanKind::kEdge);
  EXPECT_EQ(opt.cost, 2.0);
  EXPECT_LE(p.total_cost(), (std::log(4.0 * std::pow(3.0, k)) + 1) * opt.cost);
  EXPECT_NO_THROW(check_plan(g, p));
}

TEST(GreedyWalkTest, DisjointTrianglesBothCut) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  GreedyConfig c = config(1.5);
  c.stop_rule = StopRule::kLambdaDirect;
  const RemovalPlan p = greedy_walk_edges(g, c);
  int left = 0, right = 0;
  for (const Edge& e : p.edges) (e.u < 3 ? left : right)++;
  EXPECT_GE(left, 1);
  EXPECT_GE(right, 1);
  EXPECT_LT(residual_lambda(g, p), 1.5);
}

TEST(GreedyWalkTest, PathCentreEdgesFirst) {
  const Graph g = path_graph(5);
  for (auto backend : {CountingBackend::kMatrix, CountingBackend::kDpLazy}) {
    GreedyConfig c = config(1.2, 8);
    c.backend = backend;
    c.clamp = false;
    const RemovalPlan p = greedy_walk_edges(g, c);
    ASSERT_GE(p.size(), 1u);
    EXPECT_TRUE(p.edges[0] == (Edge{1, 2}) || p.edges[0] == (Edge{2, 3}));
  }
}

TEST(GreedyWalkTest, LazyEqualsEagerOnSparseGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const NodeId n = 20 + static_cast<NodeId>(seed % 41);
    const Graph g = erdos_renyi_gnp(n, 3.0 / n, seed);
    if (g.num_edges() == 0) continue;
    GreedyConfig c = config(0.6 * power_iteration(g).lambda1, 10);
    c.clamp = false;
    c.record_trajectory = false;
    c.backend = CountingBackend::kMatrix;
    const RemovalPlan eager = greedy_walk_edges(g, c);
    const RemovalPlan lazy = greedy_edge_choice_lazy(g, c);
    EXPECT_EQ(eager.edges, lazy.edges) << "seed " << seed;
  }
}

TEST(GreedyWalkTest, SpectralBoundAfterStop) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = erdos_renyi_gnp(60, 0.1, seed);
    const double t = 0.5 * power_iteration(g).lambda1;
    const RemovalPlan p = greedy_walk_edges(g, config(t));
    const int k = p.walk_length;
    const double bound = std::pow(60.0 * k, 1.0 / k) * t;
    EXPECT_LE(residual_lambda(g, p), bound + 1e-6) << "seed " << seed;
    EXPECT_NEAR(p.lambda_trajectory.back(), residual_lambda(g, p), 1e-6);
  }
}

TEST(GreedyWalkTest, ApproximationRatioOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = erdos_renyi_gnm(8, 12, seed);
    const double t = 0.7 * power_iteration(g).lambda1;
    const RemovalPlan p = greedy_walk_edges(g, config(t, 8));
    const BruteForceResult opt = brute_force_srm(g, t, PlanKind::kEdge);
    ASSERT_TRUE(opt.feasible);
    const double h = std::log(8.0 * std::pow(g.max_degree(), 8)) + 1;
    EXPECT_LE(p.total_cost(), h * opt.cost);
  }
}

TEST(GreedyWalkTest, Deterministic) {
  const Graph g = barabasi_albert(300, 3, 2);
  const GreedyConfig c = config(0.5 * power_iteration(g).lambda1);
  const RemovalPlan a = greedy_walk_edges(g, c);
  const RemovalPlan b = greedy_walk_edges(g, c);
  EXPECT_EQ(a.edges, b.edges);
  EXPECT_EQ(a.lambda_trajectory, b.lambda_trajectory);
}

TEST(GreedyWalkTest, CostsSteerTheChoice) {
  // The centre edges of P5 become expensive; the ends are cheaper per walk.
  std::vector<CostedEdge> e = {{0, 1, 1.0}, {1, 2, 100.0}, {2, 3, 100.0}, {3, 4, 1.0}};
  const Graph g = Graph::from_edges(5, e);
  const RemovalPlan p = greedy_walk_edges(g, config(1.2, 8));
  ASSERT_GE(p.size(), 1u);
  EXPECT_TRUE(p.edges[0] == (Edge{0, 1}) || p.edges[0] == (Edge{3, 4}));
}

TEST(GreedyWalkTest, BudgetTruncates) {
  const Graph g = erdos_renyi_gnp(50, 0.2, 1);
  GreedyConfig c = config(1.0);
  c.budget = 7.0;
  const RemovalPlan p = greedy_walk_edges(g, c);
  EXPECT_EQ(p.size(), 7u);
  c.stop_rule = StopRule::kBudgetOnly;
  c.threshold = 100.0;
  EXPECT_EQ(greedy_walk_edges(g, c).size(), 7u);
}

TEST(GreedyWalkTest, ExhaustedFlag) {
  GreedyConfig c = config(0.1, 4);
  c.stop_rule = StopRule::kBudgetOnly;
  const RemovalPlan p = greedy_walk_edges(complete_graph(4), c);
  EXPECT_TRUE(p.exhausted);
  EXPECT_EQ(p.size(), 6u);
}

TEST(GreedyWalkNodesTest, StarCentreFirst) {
  const RemovalPlan p = greedy_walk_nodes(star_graph(9), config(2.0));
  ASSERT_GE(p.size(), 1u);
  EXPECT_EQ(p.nodes[0], 0);
}

TEST(GreedyWalkNodesTest, K5MatchesBruteForce) {
  const Graph g = complete_graph(5);
  GreedyConfig c = config(3.2);
  c.stop_rule = StopRule::kLambdaDirect;
  const RemovalPlan p = greedy_walk_nodes(g, c);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(brute_force_srm(g, 3.2, PlanKind::kNode).cost, 1.0);
}

TEST(GreedyWalkNonuniformTest, UniformRatesMatchScaledEdgeRun) {
  const Graph g = erdos_renyi_gnp(40, 0.15, 3);
  const double beta = 0.25, delta = 1.0;
  const TransmissionMatrix b = TransmissionMatrix::uniform(g, beta, delta);
  const RemovalPlan nu = greedy_walk_nonuniform(g, b, config(0.0, 12));
  const RemovalPlan plain = greedy_walk_edges(g, config(delta / beta, 12));
  EXPECT_EQ(nu.edges, plain.edges);
}

TEST(GreedyWalkNonuniformTest, OnlyHighRateComponentIsCut) {
  const Graph g = disjoint_union(complete_graph(3), complete_graph(3));
  TransmissionMatrix b;
  b.recovery = 1.5;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    b.rates.push_back(g.edge(e).u < 3 ? 1.0 : 0.1);
  }
  GreedyConfig c = config(0.0);
  c.stop_rule = StopRule::kLambdaDirect;
  const RemovalPlan p = greedy_walk_nonuniform(g, b, c);
  ASSERT_GE(p.size(), 1u);
  for (const Edge& e : p.edges) EXPECT_LT(e.u, 3);
}

TEST(GreedyWalkNonuniformTest, SingleHotEdge) {
  const Graph g = path_graph(2);
  TransmissionMatrix b;
  b.rates = {2.0};
  b.recovery = 1.0;
  const RemovalPlan p = greedy_walk_nonuniform(g, b, config(0.0));
  EXPECT_EQ(p.size(), 1u);
  b.rates.push_back(1.0);
  EXPECT_THROW(greedy_walk_nonuniform(g, b, config(0.0)), ValidationError);
}

}  // namespace
}  // namespace srm
