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

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srm {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

inline constexpr NodeId kNoNode = -1;

// Unordered node pair stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(NodeId a, NodeId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

struct CostedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double cost = 1.0;
};

// Simple undirected graph with per-edge and per-node removal costs.
//
// Edges are kept sorted by (u, v) and EdgeId is the position in that order.
// Adjacency is compressed (CSR) with sorted neighbour lists, so neighbour
// iteration is contiguous and find_edge() is a binary search over the
// smaller endpoint list. Node removal keeps the index space: removed nodes
// stay addressable but are marked absent and have no incident edges.
//
// A Graph is immutable once built; removal operations return a new graph.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws ValidationError on self-loops, duplicate
  // pairs, out-of-range endpoints or non-positive costs. node_costs may be
  // empty (all ones); original_ids may be empty (identity).
  static Graph from_edges(NodeId num_nodes, std::span<const CostedEdge> edges,
                          std::vector<double> node_costs = {},
                          std::vector<std::int64_t> original_ids = {});

  // Convenience for tests and generators: unit costs.
  static Graph from_pairs(NodeId num_nodes, std::span<const Edge> edges);

  NodeId num_nodes() const { return num_nodes_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }
  NodeId num_present_nodes() const { return num_present_; }
  bool is_present(NodeId v) const { return present_[v] != 0; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  double edge_cost(EdgeId e) const { return edge_cost_[e]; }
  double node_cost(NodeId v) const { return node_cost_[v]; }
  std::span<const double> edge_costs() const { return edge_cost_; }
  std::span<const double> node_costs() const { return node_cost_; }

  std::optional<EdgeId> find_edge(NodeId a, NodeId b) const;
  bool has_edge(NodeId a, NodeId b) const { return find_edge(a, b).has_value(); }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {incident_.data() + offsets_[v],
            static_cast<size_t>(offsets_[v + 1] - offsets_[v])};
  }
  int degree(NodeId v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  int max_degree() const;
  std::vector<int> degree_sequence() const;

  // Identifier from the source file (identity when built programmatically).
  std::int64_t original_id(NodeId v) const { return original_ids_[v]; }
  std::span<const std::int64_t> original_ids() const { return original_ids_; }

  double total_edge_cost(std::span<const Edge> edges) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph remove_nodes(const Graph&, std::span<const NodeId>);

  NodeId num_nodes_ = 0;
  NodeId num_present_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> edge_cost_;
  std::vector<double> node_cost_;
  std::vector<std::uint8_t> present_;
  std::vector<std::int64_t> original_ids_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<EdgeId> incident_;
};

// G[E \ removed]. Node set and surviving costs unchanged. Throws
// ValidationError naming the first edge not present in g.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

// Induced subgraph on the complement. Removed nodes stay in the index space
// as absent, isolated nodes; removing an absent node is a no-op. Throws
// ValidationError on ids outside the index space.
Graph remove_nodes(const Graph& g, std::span<const NodeId> removed);

// L(G): one node per edge of g (node i is g.edge(i)), adjacent iff the two
// edges share an endpoint. Unit costs. Throws ValidationError if g has no
// edges.
Graph line_graph(const Graph& g);

// Node set of the maximal induced subgraph with minimum degree >= t, found
// by iterated peeling. Sorted ascending; empty when no such core exists.
std::vector<NodeId> k_core(const Graph& g, double t);

// Edges of g with both endpoints in `nodes` (which must be sorted).
std::vector<EdgeId> induced_edges(const Graph& g, std::span<const NodeId> nodes);

}  // namespace srm
