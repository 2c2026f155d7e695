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

#include "srm/brute_force.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "srm/adjacency.hpp"
#include "srm/errors.hpp"
#include "srm/spectral.hpp"

namespace srm {
namespace {

struct Candidate {
  double cost;
  int size;
  std::uint32_t mask;
};

std::vector<Candidate> candidates(const std::vector<double>& costs,
                                  int max_size) {
  const int items = static_cast<int>(costs.size());
  std::vector<Candidate> out;
  for (std::uint32_t mask = 0; mask < (1u << items); ++mask) {
    const int size = std::popcount(mask);
    if (max_size >= 0 && size > max_size) continue;
    double c = 0.0;
    for (int i = 0; i < items; ++i) {
      if (mask >> i & 1u) c += costs[i];
    }
    out.push_back({c, size, mask});
  }
  std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.size != b.size) return a.size < b.size;
    return a.mask < b.mask;
  });
  return out;
}

}  // namespace

BruteForceResult brute_force_srm(const Graph& g, double t, PlanKind kind,
                                 int max_subset_size) {
  if (kind == PlanKind::kEdge && g.num_edges() > 15) {
    throw SizeGuardError("edge brute force is limited to m <= 15");
  }
  if (kind == PlanKind::kNode && g.num_nodes() > 8) {
    throw SizeGuardError("node brute force is limited to n <= 8");
  }
  const NodeId n = g.num_nodes();
  std::vector<double> costs =
      kind == PlanKind::kEdge
          ? std::vector<double>(g.edge_costs().begin(), g.edge_costs().end())
          : std::vector<double>(g.node_costs().begin(), g.node_costs().end());
  PowerOptions po;
  po.tolerance = 1e-9;
  const WeightedAdjacency full(g, 1.0);

  BruteForceResult res;
  for (const Candidate& c : candidates(costs, max_subset_size)) {
    WeightedAdjacency a = full;
    if (kind == PlanKind::kEdge) {
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (c.mask >> e & 1u) a.remove_edge(e);
      }
    } else {
      for (NodeId v = 0; v < n; ++v) {
        if ((c.mask >> v & 1u) && a.node_alive(v)) a.remove_node(v);
      }
    }
    // Cheap necessary conditions: sqrt(max degree) and the average degree
    // both bound lambda1 from below.
    int maxdeg = 0;
    for (NodeId v = 0; v < n; ++v) maxdeg = std::max(maxdeg, a.degree(v));
    if (std::sqrt(static_cast<double>(maxdeg)) >= t) continue;
    if (n > 0 && 2.0 * a.num_live_edges() / n >= t) continue;
    if (power_iteration(a, po).lambda1 >= t) continue;
    res.feasible = true;
    res.cost = c.cost;
    for (int i = 0; i < static_cast<int>(costs.size()); ++i) {
      if (!(c.mask >> i & 1u)) continue;
      if (kind == PlanKind::kEdge) {
        res.edges.push_back(g.edge(i));
      } else {
        res.nodes.push_back(i);
      }
    }
    return res;
  }
  return res;
}

}  // namespace srm
