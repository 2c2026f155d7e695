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

#include "srm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "srm/errors.hpp"

namespace srm {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

namespace {

bool valid_cost(double c) { return std::isfinite(c) && c > 0.0; }

}  // namespace

Graph Graph::from_edges(NodeId num_nodes, std::span<const CostedEdge> edges,
                        std::vector<double> node_costs,
                        std::vector<std::int64_t> original_ids) {
  if (num_nodes < 0) throw ValidationError("negative node count");
  Graph g;
  g.num_nodes_ = num_nodes;
  g.num_present_ = num_nodes;
  g.present_.assign(num_nodes, 1);

  if (node_costs.empty()) node_costs.assign(num_nodes, 1.0);
  if (static_cast<NodeId>(node_costs.size()) != num_nodes) {
    throw ValidationError("node cost vector has wrong length");
  }
  for (NodeId v = 0; v < num_nodes; ++v) {
    if (!valid_cost(node_costs[v])) {
      throw ValidationError("node " + std::to_string(v) +
                            " has non-positive cost");
    }
  }
  g.node_cost_ = std::move(node_costs);

  if (original_ids.empty()) {
    original_ids.resize(num_nodes);
    std::iota(original_ids.begin(), original_ids.end(), std::int64_t{0});
  }
  if (static_cast<NodeId>(original_ids.size()) != num_nodes) {
    throw ValidationError("original id vector has wrong length");
  }
  g.original_ids_ = std::move(original_ids);

  std::vector<std::pair<Edge, double>> sorted;
  sorted.reserve(edges.size());
  for (const CostedEdge& ce : edges) {
    if (ce.u < 0 || ce.v < 0 || ce.u >= num_nodes || ce.v >= num_nodes) {
      throw ValidationError("edge endpoint out of range: " +
                            std::to_string(ce.u) + " " + std::to_string(ce.v));
    }
    if (ce.u == ce.v) {
      throw ValidationError("self-loop at node " + std::to_string(ce.u));
    }
    if (!valid_cost(ce.cost)) {
      throw ValidationError("edge " + to_string(make_edge(ce.u, ce.v)) +
                            " has non-positive cost");
    }
    sorted.emplace_back(make_edge(ce.u, ce.v), ce.cost);
  }
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].first == sorted[i - 1].first) {
      throw ValidationError("duplicate edge " + to_string(sorted[i].first));
    }
  }
  g.edges_.reserve(sorted.size());
  g.edge_cost_.reserve(sorted.size());
  for (const auto& [e, c] : sorted) {
    g.edges_.push_back(e);
    g.edge_cost_.push_back(c);
  }

  // CSR. Filling in edge order yields sorted neighbour lists: for a node x,
  // edges (w, x) with w < x arrive in increasing w before edges (x, y).
  std::vector<std::int64_t> deg(num_nodes + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (NodeId v = 0; v < num_nodes; ++v) {
    g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  }
  g.neighbors_.resize(2 * g.edges_.size());
  g.incident_.resize(2 * g.edges_.size());
  std::vector<std::int64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edges_[id];
    g.neighbors_[cursor[e.u]] = e.v;
    g.incident_[cursor[e.u]++] = id;
    g.neighbors_[cursor[e.v]] = e.u;
    g.incident_[cursor[e.v]++] = id;
  }
  return g;
}

Graph Graph::from_pairs(NodeId num_nodes, std::span<const Edge> edges) {
  std::vector<CostedEdge> costed;
  costed.reserve(edges.size());
  for (const Edge& e : edges) costed.push_back({e.u, e.v, 1.0});
  return from_edges(num_nodes, costed);
}

std::optional<EdgeId> Graph::find_edge(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= num_nodes_ || b >= num_nodes_ || a == b) {
    return std::nullopt;
  }
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[it - nb.begin()];
}

int Graph::max_degree() const {
  int best = 0;
  for (NodeId v = 0; v < num_nodes_; ++v) best = std::max(best, degree(v));
  return best;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(num_nodes_);
  for (NodeId v = 0; v < num_nodes_; ++v) d[v] = degree(v);
  return d;
}

double Graph::total_edge_cost(std::span<const Edge> edges) const {
  double total = 0.0;
  for (const Edge& e : edges) {
    auto id = find_edge(e.u, e.v);
    if (!id) throw ValidationError("unknown edge " + to_string(e));
    total += edge_cost_[*id];
  }
  return total;
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<std::uint8_t> drop(g.num_edges(), 0);
  for (const Edge& raw : removed) {
    const Edge e = make_edge(raw.u, raw.v);
    auto id = g.find_edge(e.u, e.v);
    if (!id) throw ValidationError("cannot remove unknown edge " + to_string(e));
    drop[*id] = 1;
  }
  std::vector<CostedEdge> kept;
  kept.reserve(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (drop[id]) continue;
    kept.push_back({g.edge(id).u, g.edge(id).v, g.edge_cost(id)});
  }
  Graph out = Graph::from_edges(
      g.num_nodes(), kept, std::vector<double>(g.node_costs().begin(),
                                               g.node_costs().end()),
      std::vector<std::int64_t>(g.original_ids().begin(),
                                g.original_ids().end()));
  // Absent nodes stay absent.
  if (g.num_present_nodes() != g.num_nodes()) {
    std::vector<NodeId> absent;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (!g.is_present(v)) absent.push_back(v);
    }
    out = remove_nodes(out, absent);
  }
  return out;
}

Graph remove_nodes(const Graph& g, std::span<const NodeId> removed) {
  std::vector<std::uint8_t> drop(g.num_nodes(), 0);
  for (NodeId v : removed) {
    if (v < 0 || v >= g.num_nodes()) {
      throw ValidationError("cannot remove unknown node " + std::to_string(v));
    }
    drop[v] = 1;
  }
  std::vector<CostedEdge> kept;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    if (drop[e.u] || drop[e.v]) continue;
    kept.push_back({e.u, e.v, g.edge_cost(id)});
  }
  Graph out = Graph::from_edges(
      g.num_nodes(), kept,
      std::vector<double>(g.node_costs().begin(), g.node_costs().end()),
      std::vector<std::int64_t>(g.original_ids().begin(),
                                g.original_ids().end()));
  out.num_present_ = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    out.present_[v] = (g.is_present(v) && !drop[v]) ? 1 : 0;
    out.num_present_ += out.present_[v];
  }
  return out;
}

Graph line_graph(const Graph& g) {
  if (g.num_edges() == 0) {
    throw ValidationError("line graph of an edgeless graph is undefined");
  }
  std::vector<CostedEdge> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto inc = g.incident_edges(v);
    for (size_t i = 0; i < inc.size(); ++i) {
      for (size_t j = i + 1; j < inc.size(); ++j) {
        out.push_back({inc[i], inc[j], 1.0});
      }
    }
  }
  // Two distinct edges of a simple graph share at most one endpoint, so the
  // pairs above are already unique.
  return Graph::from_edges(g.num_edges(), out);
}

std::vector<NodeId> k_core(const Graph& g, double t) {
  const NodeId n = g.num_nodes();
  std::vector<int> deg = g.degree_sequence();
  std::vector<std::uint8_t> alive(n, 0);
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < n; ++v) {
    if (!g.is_present(v)) continue;
    alive[v] = 1;
    if (deg[v] < t) stack.push_back(v);
  }
  for (NodeId v : stack) alive[v] = 0;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : g.neighbors(v)) {
      if (!alive[u]) continue;
      if (--deg[u] < t) {
        alive[u] = 0;
        stack.push_back(u);
      }
    }
  }
  std::vector<NodeId> core;
  for (NodeId v = 0; v < n; ++v) {
    if (alive[v]) core.push_back(v);
  }
  return core;
}

std::vector<EdgeId> induced_edges(const Graph& g,
                                  std::span<const NodeId> nodes) {
  std::vector<std::uint8_t> in(g.num_nodes(), 0);
  for (NodeId v : nodes) in[v] = 1;
  std::vector<EdgeId> out;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    if (in[g.edge(id).u] && in[g.edge(id).v]) out.push_back(id);
  }
  return out;
}

}  // namespace srm
