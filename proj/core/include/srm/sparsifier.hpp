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

#include "srm/graph.hpp"
#include "srm/greedy_walk.hpp"
#include "srm/plan.hpp"

namespace srm {

struct PruneResult {
  std::vector<EdgeId> removed;  // ids in the input graph, in removal order
  Graph residual;
};

// Visits nodes in ascending id. A node whose residual degree d is at least
// T^2 loses its d - ceil(T^2) + 1 cheapest incident edges (cost, then edge
// id). Afterwards every degree is below T^2.
PruneResult max_degree_reduction(const Graph& g, double t);

// Removes the ceil(|E(C)| - T |V(C)| / 2 + 1) cheapest edges inside the
// T-core C, once. No-op when the core is empty.
PruneResult density_reduction(const Graph& g, double t);

// Both pruning phases followed by greedy_walk_edges on what is left. Phases
// are labelled "max-degree", "density" and "greedy" in the plan.
RemovalPlan greedy_walk_sparse(const Graph& g, const GreedyConfig& cfg);

}  // namespace srm
