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

#include "srm/adjacency.hpp"

#include <cmath>

#include "srm/errors.hpp"

namespace srm {

WeightedAdjacency::WeightedAdjacency(const Graph& g, double scale) {
  std::vector<double> ones(g.num_edges(), 1.0);
  build(g, ones, scale);
}

WeightedAdjacency::WeightedAdjacency(const Graph& g,
                                     std::span<const double> weights,
                                     double scale) {
  build(g, weights, scale);
}

void WeightedAdjacency::build(const Graph& g, std::span<const double> weights,
                              double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw ValidationError("scale must be positive and finite");
  }
  if (static_cast<EdgeId>(weights.size()) != g.num_edges()) {
    throw ValidationError("weight vector does not match the edge count");
  }
  n_ = g.num_nodes();
  edges_.assign(g.edges().begin(), g.edges().end());
  weight_.resize(edges_.size());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!(weights[e] > 0.0) || !std::isfinite(weights[e])) {
      throw ValidationError("edge weights must be positive and finite");
    }
    weight_[e] = weights[e] / scale;
  }
  live_edges_ = g.num_edges();
  node_alive_.resize(n_);
  degree_.resize(n_);
  offsets_.assign(n_ + 1, 0);
  for (NodeId v = 0; v < n_; ++v) {
    node_alive_[v] = g.is_present(v) ? 1 : 0;
    degree_[v] = g.degree(v);
    offsets_[v + 1] = offsets_[v] + g.degree(v);
  }
  targets_.resize(offsets_[n_]);
  weights_.resize(offsets_[n_]);
  slot_edge_.resize(offsets_[n_]);
  slot_of_.resize(2 * edges_.size());
  std::vector<std::uint8_t> first_seen(edges_.size(), 0);
  for (NodeId v = 0; v < n_; ++v) {
    auto nb = g.neighbors(v);
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const std::size_t s = offsets_[v] + i;
      targets_[s] = nb[i];
      weights_[s] = weight_[inc[i]];
      slot_edge_[s] = inc[i];
      slot_of_[2 * inc[i] + first_seen[inc[i]]++] = s;
    }
  }
  dead_slots_ = 0;
}

void WeightedAdjacency::remove_edge(EdgeId e) {
  if (e < 0 || e >= num_edge_ids() || weight_[e] == 0.0) {
    throw ValidationError("edge is not live");
  }
  weight_[e] = 0.0;
  weights_[slot_of_[2 * e]] = 0.0;
  weights_[slot_of_[2 * e + 1]] = 0.0;
  --degree_[edges_[e].u];
  --degree_[edges_[e].v];
  --live_edges_;
  dead_slots_ += 2;
  if (dead_slots_ > 64 && 2 * dead_slots_ > targets_.size()) compact();
}

void WeightedAdjacency::remove_node(NodeId v) {
  if (v < 0 || v >= n_ || !node_alive_[v]) {
    throw ValidationError("node is not present");
  }
  // Collect first: compaction inside remove_edge would move the slots.
  std::vector<EdgeId> live;
  for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
    if (weights_[s] != 0.0) live.push_back(slot_edge_[s]);
  }
  for (EdgeId e : live) remove_edge(e);
  node_alive_[v] = 0;
}

void WeightedAdjacency::compact() {
  std::vector<std::size_t> offsets(n_ + 1, 0);
  for (NodeId v = 0; v < n_; ++v) offsets[v + 1] = offsets[v] + degree_[v];
  std::vector<NodeId> targets(offsets[n_]);
  std::vector<double> weights(offsets[n_]);
  std::vector<EdgeId> slot_edge(offsets[n_]);
  for (NodeId v = 0; v < n_; ++v) {
    std::size_t out = offsets[v];
    for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      if (weights_[s] == 0.0) continue;
      targets[out] = targets_[s];
      weights[out] = weights_[s];
      slot_edge[out] = slot_edge_[s];
      const EdgeId e = slot_edge_[s];
      // Endpoint u owns slot_of_[2e], v owns slot_of_[2e + 1].
      slot_of_[2 * e + (edges_[e].u == v ? 0 : 1)] = out;
      ++out;
    }
  }
  offsets_ = std::move(offsets);
  targets_ = std::move(targets);
  weights_ = std::move(weights);
  slot_edge_ = std::move(slot_edge);
  dead_slots_ = 0;
}

void WeightedAdjacency::multiply(std::span<const double> x,
                                 std::span<double> y) const {
  const NodeId* t = targets_.data();
  const double* w = weights_.data();
  for (NodeId v = 0; v < n_; ++v) {
    double acc = 0.0;
    for (std::size_t s = offsets_[v]; s < offsets_[v + 1]; ++s) {
      acc += w[s] * x[t[s]];
    }
    y[v] = acc;
  }
}

namespace {

template <int C>
void block_kernel(NodeId n, const std::size_t* off, const NodeId* t,
                  const double* w, const double* x, double* y) {
  for (NodeId v = 0; v < n; ++v) {
    double acc[C] = {};
    for (std::size_t s = off[v]; s < off[v + 1]; ++s) {
      const double ws = w[s];
      const double* xr = x + static_cast<std::size_t>(t[s]) * C;
      for (int c = 0; c < C; ++c) acc[c] += ws * xr[c];
    }
    double* yr = y + static_cast<std::size_t>(v) * C;
    for (int c = 0; c < C; ++c) yr[c] = acc[c];
  }
}

}  // namespace

void WeightedAdjacency::multiply_block(const double* x, double* y,
                                       int cols) const {
  const std::size_t* off = offsets_.data();
  const NodeId* t = targets_.data();
  const double* w = weights_.data();
  switch (cols) {
    case 1: block_kernel<1>(n_, off, t, w, x, y); return;
    case 2: block_kernel<2>(n_, off, t, w, x, y); return;
    case 4: block_kernel<4>(n_, off, t, w, x, y); return;
    case 8: block_kernel<8>(n_, off, t, w, x, y); return;
    default: break;
  }
  for (NodeId v = 0; v < n_; ++v) {
    double* yr = y + static_cast<std::size_t>(v) * cols;
    for (int c = 0; c < cols; ++c) yr[c] = 0.0;
    for (std::size_t s = off[v]; s < off[v + 1]; ++s) {
      const double* xr = x + static_cast<std::size_t>(t[s]) * cols;
      for (int c = 0; c < cols; ++c) yr[c] += w[s] * xr[c];
    }
  }
}

}  // namespace srm
