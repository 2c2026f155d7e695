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

#include "srm/sparsifier.hpp"

#include <algorithm>
#include <cmath>

#include "srm/errors.hpp"

namespace srm {
namespace {

void by_cost_then_id(const Graph& g, std::vector<EdgeId>& ids) {
  std::sort(ids.begin(), ids.end(), [&](EdgeId a, EdgeId b) {
    return g.edge_cost(a) != g.edge_cost(b) ? g.edge_cost(a) < g.edge_cost(b)
                                            : a < b;
  });
}

Graph drop_ids(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<Edge> e;
  e.reserve(ids.size());
  for (EdgeId id : ids) e.push_back(g.edge(id));
  return remove_edges(g, e);
}

}  // namespace

PruneResult max_degree_reduction(const Graph& g, double t) {
  if (!(t > 0.0)) throw ValidationError("threshold must be positive");
  const double t2 = t * t;
  const auto cap = static_cast<std::int64_t>(std::ceil(t2));
  std::vector<int> deg = g.degree_sequence();
  std::vector<std::uint8_t> gone(g.num_edges(), 0);
  PruneResult out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (deg[v] < t2) continue;
    std::vector<EdgeId> live;
    for (EdgeId id : g.incident_edges(v)) {
      if (!gone[id]) live.push_back(id);
    }
    by_cost_then_id(g, live);
    const auto drop = static_cast<std::size_t>(deg[v] - cap + 1);
    for (std::size_t i = 0; i < drop && i < live.size(); ++i) {
      const EdgeId id = live[i];
      gone[id] = 1;
      --deg[g.edge(id).u];
      --deg[g.edge(id).v];
      out.removed.push_back(id);
    }
  }
  out.residual = drop_ids(g, out.removed);
  return out;
}

PruneResult density_reduction(const Graph& g, double t) {
  if (!(t > 0.0)) throw ValidationError("threshold must be positive");
  PruneResult out;
  const auto core = k_core(g, t);
  if (core.empty()) {
    out.residual = g;
    return out;
  }
  std::vector<EdgeId> inside = induced_edges(g, core);
  by_cost_then_id(g, inside);
  const double excess =
      static_cast<double>(inside.size()) - t * core.size() / 2.0 + 1.0;
  const auto count = std::min<std::size_t>(
      inside.size(), static_cast<std::size_t>(std::max(0.0, std::ceil(excess))));
  out.removed.assign(inside.begin(), inside.begin() + count);
  out.residual = drop_ids(g, out.removed);
  return out;
}

RemovalPlan greedy_walk_sparse(const Graph& g, const GreedyConfig& cfg) {
  const double t = cfg.threshold;
  RemovalPlan plan;
  plan.kind = PlanKind::kEdge;
  plan.phase_names = {"max-degree", "density", "greedy"};
  const auto p1 = max_degree_reduction(g, t);
  for (EdgeId id : p1.removed) plan.add_edge(g.edge(id), g.edge_cost(id), 0);
  const auto p2 = density_reduction(p1.residual, t);
  for (EdgeId id : p2.removed) {
    plan.add_edge(p1.residual.edge(id), p1.residual.edge_cost(id), 1);
  }
  GreedyConfig rest = cfg;
  rest.record_trajectory = false;
  rest.budget = cfg.budget - plan.total_cost();
  const RemovalPlan p3 = greedy_walk_edges(p2.residual, rest);
  for (std::size_t i = 0; i < p3.size(); ++i) {
    plan.add_edge(p3.edges[i], p3.step_cost[i], 2);
  }
  plan.exhausted = p3.exhausted;
  plan.walk_length = p3.walk_length;
  plan.scale = p3.scale;
  if (cfg.record_trajectory) record_trajectory(g, plan);
  return plan;
}

}  // namespace srm
