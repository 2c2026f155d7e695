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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

enum class PlanKind { kEdge, kNode };

// Ordered removals with running cost and the spectral radius after each
// step. lambda_trajectory[0] is the input graph; when recorded it has
// size() + 1 entries.
struct RemovalPlan {
  PlanKind kind = PlanKind::kEdge;
  std::vector<Edge> edges;    // kind == kEdge
  std::vector<NodeId> nodes;  // kind == kNode
  std::vector<double> step_cost;
  std::vector<double> cumulative_cost;
  std::vector<double> lambda_trajectory;
  std::vector<int> phase;  // index into phase_names, one per step
  std::vector<std::string> phase_names;
  // True when the run stopped because nothing removable was left.
  bool exhausted = false;
  // Walk length and scale used by walk-based algorithms; 0 otherwise.
  int walk_length = 0;
  double scale = 0.0;

  std::size_t size() const { return step_cost.size(); }
  double total_cost() const {
    return cumulative_cost.empty() ? 0.0 : cumulative_cost.back();
  }
  bool has_trajectory() const { return lambda_trajectory.size() == size() + 1; }

  void add_edge(Edge e, double cost, int phase_index = 0);
  void add_node(NodeId v, double cost, int phase_index = 0);
};

struct TrajectoryOptions {
  double tolerance = 1e-9;
  // Per-edge weights (transmission rates); empty means the 0/1 adjacency.
  std::span<const double> weights = {};
};

// Fills lambda_trajectory by replaying the plan with warm-started power
// iteration on the same engine for every algorithm.
void record_trajectory(const Graph& g, RemovalPlan& plan,
                       const TrajectoryOptions& opts = {});

// Graph left after the first `prefix` removals (all by default).
Graph residual_graph(const Graph& g, const RemovalPlan& plan,
                     std::size_t prefix = static_cast<std::size_t>(-1));

// Throws ValidationError unless the plan's structural invariants hold:
// distinct items present in g, cumulative cost nondecreasing and matching
// the per-step costs, and a trajectory of length size() + 1 if recorded.
void check_plan(const Graph& g, const RemovalPlan& plan);

}  // namespace srm
