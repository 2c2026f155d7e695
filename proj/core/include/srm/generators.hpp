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

#include <cstdint>

#include "srm/graph.hpp"

namespace srm {

Graph complete_graph(NodeId n);
Graph path_graph(NodeId n);
Graph cycle_graph(NodeId n);
// Node 0 is the centre, 1..leaves are the leaves.
Graph star_graph(NodeId leaves);
// Nodes of b are shifted by a.num_nodes(). Costs are kept.
Graph disjoint_union(const Graph& a, const Graph& b);

// G(n, p) by geometric skipping over the pair sequence.
Graph erdos_renyi_gnp(NodeId n, double p, std::uint64_t seed);
// Uniform graph with exactly m edges.
Graph erdos_renyi_gnm(NodeId n, EdgeId m, std::uint64_t seed);
// Preferential attachment: seed clique on m0 + 1 nodes, then every new node
// links to m0 distinct existing nodes chosen proportionally to degree.
// Yields m = m0 (m0 + 1) / 2 + (n - m0 - 1) m0 edges.
Graph barabasi_albert(NodeId n, int m0, std::uint64_t seed);

}  // namespace srm
