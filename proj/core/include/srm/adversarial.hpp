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

namespace srm {

// Clique K_{T'+1} containing v0, bridge (v0, v1), caterpillar spine
// v1 .. v_{q-1} with T' leaves per spine node, bridge (v_{q-1}, v_q), and a
// star centred at v_q with (T'+1)^2 leaves.
struct AdversarialInstance {
  Graph graph;
  int t_prime = 0;
  int q = 0;
  // Two bridges, one clique edge and 2T'+2 star spokes. Removing them leaves
  // every component with lambda1 < T'.
  std::vector<Edge> witness_edges;
  std::vector<NodeId> clique_nodes;  // v0 first
  std::vector<NodeId> path_nodes;    // spine v1 .. v_{q-1} then their leaves
  std::vector<NodeId> star_nodes;    // v_q first
  NodeId v0 = 0, v1 = 0, vq_minus_1 = 0, vq = 0;
};

// Requires T' >= 2 and q >= 3.
AdversarialInstance make_adversarial(int t_prime, int q);

}  // namespace srm
