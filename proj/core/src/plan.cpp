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

#include "srm/plan.hpp"

#include <cmath>
#include <set>

#include "srm/adjacency.hpp"
#include "srm/errors.hpp"
#include "srm/spectral.hpp"

namespace srm {

void RemovalPlan::add_edge(Edge e, double cost, int phase_index) {
  edges.push_back(e);
  step_cost.push_back(cost);
  cumulative_cost.push_back(total_cost() + cost);
  phase.push_back(phase_index);
}

void RemovalPlan::add_node(NodeId v, double cost, int phase_index) {
  nodes.push_back(v);
  step_cost.push_back(cost);
  cumulative_cost.push_back(total_cost() + cost);
  phase.push_back(phase_index);
}

void record_trajectory(const Graph& g, RemovalPlan& plan,
                       const TrajectoryOptions& opts) {
  WeightedAdjacency a = opts.weights.empty()
                            ? WeightedAdjacency(g, 1.0)
                            : WeightedAdjacency(g, opts.weights, 1.0);
  PowerOptions po;
  po.tolerance = opts.tolerance;
  auto rep = power_iteration(a, po);
  plan.lambda_trajectory.assign(1, rep.lambda1);
  std::vector<double> warm = std::move(rep.eigenvector);
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (plan.kind == PlanKind::kEdge) {
      auto id = g.find_edge(plan.edges[i].u, plan.edges[i].v);
      if (!id) throw ValidationError("plan edge not in graph");
      a.remove_edge(*id);
    } else {
      a.remove_node(plan.nodes[i]);
    }
    po.start = warm;
    rep = power_iteration(a, po);
    plan.lambda_trajectory.push_back(rep.lambda1);
    warm = std::move(rep.eigenvector);
  }
}

Graph residual_graph(const Graph& g, const RemovalPlan& plan,
                     std::size_t prefix) {
  prefix = std::min(prefix, plan.size());
  if (plan.kind == PlanKind::kEdge) {
    return remove_edges(g, std::span(plan.edges).first(prefix));
  }
  return remove_nodes(g, std::span(plan.nodes).first(prefix));
}

void check_plan(const Graph& g, const RemovalPlan& plan) {
  const std::size_t items =
      plan.kind == PlanKind::kEdge ? plan.edges.size() : plan.nodes.size();
  if (items != plan.size() || plan.cumulative_cost.size() != plan.size() ||
      plan.phase.size() != plan.size()) {
    throw ValidationError("plan arrays have inconsistent lengths");
  }
  double running = 0.0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    running += plan.step_cost[i];
    if (std::abs(running - plan.cumulative_cost[i]) >
        1e-9 * std::max(1.0, running)) {
      throw ValidationError("cumulative cost does not match step costs");
    }
    if (i > 0 && plan.cumulative_cost[i] < plan.cumulative_cost[i - 1]) {
      throw ValidationError("cumulative cost decreases");
    }
  }
  if (plan.kind == PlanKind::kEdge) {
    std::set<Edge> seen;
    for (const Edge& e : plan.edges) {
      if (!g.has_edge(e.u, e.v)) {
        throw ValidationError("plan removes unknown edge " + to_string(e));
      }
      if (!seen.insert(make_edge(e.u, e.v)).second) {
        throw ValidationError("plan removes " + to_string(e) + " twice");
      }
    }
  } else {
    std::set<NodeId> seen;
    for (NodeId v : plan.nodes) {
      if (v < 0 || v >= g.num_nodes() || !g.is_present(v)) {
        throw ValidationError("plan removes unknown node " + std::to_string(v));
      }
      if (!seen.insert(v).second) {
        throw ValidationError("plan removes node " + std::to_string(v) +
                              " twice");
      }
    }
  }
  if (!plan.lambda_trajectory.empty() && !plan.has_trajectory()) {
    throw ValidationError("trajectory length must be plan size + 1");
  }
}

}  // namespace srm
