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
#include "srm/plan.hpp"

namespace srm {

struct BruteForceResult {
  bool feasible = false;  // false: nothing within max_subset_size works
  double cost = 0.0;
  std::vector<Edge> edges;    // kind == kEdge
  std::vector<NodeId> nodes;  // kind == kNode
};

// Cheapest edge (or node) set whose removal leaves lambda1 < T, by
// exhaustive search in increasing cost order with lambda1 from power
// iteration at 1e-9. Refuses m > 15 edges or n > 8 nodes with
// SizeGuardError. max_subset_size < 0 means unbounded.
BruteForceResult brute_force_srm(const Graph& g, double t, PlanKind kind,
                                 int max_subset_size = -1);

}  // namespace srm
