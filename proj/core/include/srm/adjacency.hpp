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

#include <span>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

// Mutable, scaled adjacency operator used by every numeric kernel.
//
// Entry (u, v) is weight(e) / scale for each edge e = (u, v) of the source
// graph. Removing an edge or node zeroes the affected entries; the slot
// layout is compacted once more than half of it is dead, so repeated
// multiplies stay proportional to the live edge count.
class WeightedAdjacency {
 public:
  WeightedAdjacency() = default;
  // Unit weights.
  WeightedAdjacency(const Graph& g, double scale);
  // weights is indexed by EdgeId and must be positive.
  WeightedAdjacency(const Graph& g, std::span<const double> weights,
                    double scale);

  NodeId num_nodes() const { return n_; }
  // Edge ids refer to the source graph; this is its edge count.
  EdgeId num_edge_ids() const { return static_cast<EdgeId>(edges_.size()); }
  EdgeId num_live_edges() const { return live_edges_; }
  std::size_t num_slots() const { return targets_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  bool edge_alive(EdgeId e) const { return weight_[e] != 0.0; }
  // Scaled weight of e, zero once removed.
  double weight(EdgeId e) const { return weight_[e]; }
  bool node_alive(NodeId v) const { return node_alive_[v] != 0; }
  int degree(NodeId v) const { return degree_[v]; }

  // Live slots of v: neighbour, scaled weight and edge id. Dead slots may
  // still appear with weight zero between compactions.
  std::span<const NodeId> slot_targets(NodeId v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const double> slot_weights(NodeId v) const {
    return {weights_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::span<const EdgeId> slot_edges(NodeId v) const {
    return {slot_edge_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  void remove_edge(EdgeId e);
  // Removes every live edge at v and marks v absent.
  void remove_node(NodeId v);

  // y = A x.
  void multiply(std::span<const double> x, std::span<double> y) const;
  // Y = A X for row-major n x cols blocks.
  void multiply_block(const double* x, double* y, int cols) const;

 private:
  void build(const Graph& g, std::span<const double> weights, double scale);
  void compact();

  NodeId n_ = 0;
  EdgeId live_edges_ = 0;
  std::size_t dead_slots_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> weight_;
  std::vector<std::uint8_t> node_alive_;
  std::vector<int> degree_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<double> weights_;
  std::vector<EdgeId> slot_edge_;
  std::vector<std::size_t> slot_of_;  // 2 per edge
};

}  // namespace srm
