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

#include "srm/generators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "srm/errors.hpp"
#include "srm/random.hpp"

namespace srm {

Graph complete_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return Graph::from_pairs(n, e);
}

Graph path_graph(NodeId n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_pairs(n, e);
}

Graph cycle_graph(NodeId n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 nodes");
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_pairs(n, e);
}

Graph star_graph(NodeId leaves) {
  std::vector<Edge> e;
  for (NodeId i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_pairs(leaves + 1, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const NodeId shift = a.num_nodes();
  std::vector<CostedEdge> e;
  for (EdgeId id = 0; id < a.num_edges(); ++id) {
    e.push_back({a.edge(id).u, a.edge(id).v, a.edge_cost(id)});
  }
  for (EdgeId id = 0; id < b.num_edges(); ++id) {
    e.push_back({b.edge(id).u + shift, b.edge(id).v + shift, b.edge_cost(id)});
  }
  std::vector<double> nc(a.node_costs().begin(), a.node_costs().end());
  nc.insert(nc.end(), b.node_costs().begin(), b.node_costs().end());
  return Graph::from_edges(shift + b.num_nodes(), e, std::move(nc));
}

Graph erdos_renyi_gnp(NodeId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw ValidationError("edge probability outside [0,1]");
  std::vector<Edge> e;
  if (p > 0.0 && n > 1) {
    SplitMix64 rng(seed);
    // Walk the pairs (v, w), w < v, skipping geometric gaps.
    const double lp = std::log1p(-p);
    std::int64_t v = 1, w = -1;
    while (v < n) {
      if (p >= 1.0) {
        ++w;
      } else {
        const double r = rng.uniform();
        w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / lp));
      }
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) e.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
    }
  }
  return Graph::from_pairs(n, e);
}

Graph erdos_renyi_gnm(NodeId n, EdgeId m, std::uint64_t seed) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw ValidationError("edge count out of range");
  SplitMix64 rng(seed);
  std::unordered_set<std::int64_t> seen;
  std::vector<Edge> e;
  while (static_cast<EdgeId>(e.size()) < m) {
    const auto a = static_cast<NodeId>(rng.below(n));
    const auto b = static_cast<NodeId>(rng.below(n));
    if (a == b) continue;
    const Edge ed = make_edge(a, b);
    if (seen.insert(static_cast<std::int64_t>(ed.u) * n + ed.v).second) {
      e.push_back(ed);
    }
  }
  return Graph::from_pairs(n, e);
}

Graph barabasi_albert(NodeId n, int m0, std::uint64_t seed) {
  if (m0 < 1 || n < m0 + 1) throw ValidationError("need n > m0 >= 1");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  std::vector<NodeId> ends;  // each node appears once per incident edge
  for (NodeId i = 0; i <= m0; ++i) {
    for (NodeId j = i + 1; j <= m0; ++j) {
      e.push_back({i, j});
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId v = m0 + 1; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m0) {
      const NodeId t = ends[rng.below(ends.size())];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) {
        targets.push_back(t);
      }
    }
    for (NodeId t : targets) {
      e.push_back({t, v});
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return Graph::from_pairs(n, e);
}

}  // namespace srm
