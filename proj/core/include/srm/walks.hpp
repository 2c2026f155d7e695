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

#include <vector>

#include "srm/adjacency.hpp"
#include "srm/graph.hpp"

namespace srm {

// Closed-walk counts in scaled units: with At = A / scale,
//   per_edge[e]  = At^(k-1)_{uv} for e = (u, v) (0 for removed edges),
//   per_node[v]  = At^k_{vv},
//   total_rooted = trace(At^k) = sum of per_node.
struct WalkTable {
  int k = 0;
  double scale = 1.0;
  double total_rooted = 0.0;
  std::vector<double> per_edge;
  std::vector<double> per_node;
};

// k even and >= 2, scale > 0. Throws NumericOverflowError when a value
// leaves the double range (use a larger scale).
WalkTable walk_table_matrix(const Graph& g, int k, double scale);

// Same on a live operator (already scaled; scale is recorded as 1). Chooses
// dense powering or batched sparse columns from a vertex cover, whichever
// is cheaper.
WalkTable walk_table(const WeightedAdjacency& a, int k);

// At^(k-1)_{uv} by the single-source recurrence over neighbour lists.
// O(m k) time, O(n) space. Throws ValidationError if e is not an edge.
double walk_count_dp(const Graph& g, Edge e, int k, double scale);

// out = At^steps e_v.
void walk_column(const WeightedAdjacency& a, NodeId v, int steps,
                 std::vector<double>& out);

// Exact drop of trace(At^k) caused by removing an edge of scaled weight w
// between i and j. `after` is the operator with the edge already removed.
double trace_drop_edge(const WeightedAdjacency& after, NodeId i, NodeId j,
                       double w, int k);

// Exact drop of trace(At^k) caused by removing a node whose live incident
// edges went to `nbrs` with scaled weights `w`. `after` is the operator with
// the node already removed.
double trace_drop_node(const WeightedAdjacency& after,
                       const std::vector<NodeId>& nbrs,
                       const std::vector<double>& w, int k);

}  // namespace srm
