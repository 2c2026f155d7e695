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

// Reference computations that share no code with the library kernels.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "srm/graph.hpp"

namespace srm::oracle {

inline Eigen::MatrixXd dense_adjacency(const Graph& g,
                                       const std::vector<double>& w = {}) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.num_nodes(), g.num_nodes());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const double x = w.empty() ? 1.0 : w[e];
    a(g.edge(e).u, g.edge(e).v) = x;
    a(g.edge(e).v, g.edge(e).u) = x;
  }
  return a;
}

// Largest eigenvalue from a full symmetric eigendecomposition.
inline double dense_lambda(const Graph& g, const std::vector<double>& w = {}) {
  if (g.num_nodes() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(dense_adjacency(g, w),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

// Plain power iteration on A + I from the all-ones vector, stopping when the
// Rayleigh quotient moves by less than tol. For graphs too large for a
// dense solve.
inline double simple_power_lambda(const Graph& g, double tol = 1e-9,
                                  int max_iters = 200000) {
  const NodeId n = g.num_nodes();
  if (n == 0 || g.num_edges() == 0) return 0.0;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  double prev = 0.0;
  for (int it = 0; it < max_iters; ++it) {
    for (NodeId v = 0; v < n; ++v) {
      double s = x[v];
      for (NodeId u : g.neighbors(v)) s += x[u];
      y[v] = s;
    }
    const double rq = std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
    const double norm = std::sqrt(std::inner_product(y.begin(), y.end(), y.begin(), 0.0));
    for (NodeId v = 0; v < n; ++v) x[v] = y[v] / norm;
    if (it > 10 && std::abs(rq - prev) <= tol * std::max(1.0, rq)) return rq - 1.0;
    prev = rq;
  }
  return prev - 1.0;
}

// trace(A^k) as an exact integer by repeated dense multiplication in
// 64-bit arithmetic.
inline std::uint64_t trace_power(const Graph& g, int k) {
  const NodeId n = g.num_nodes();
  std::vector<std::uint64_t> a(n * n, 0), p(n * n, 0), t(n * n);
  for (const Edge& e : g.edges()) a[e.u * n + e.v] = a[e.v * n + e.u] = 1;
  for (NodeId i = 0; i < n; ++i) p[i * n + i] = 1;
  for (int s = 0; s < k; ++s) {
    std::fill(t.begin(), t.end(), 0);
    for (NodeId i = 0; i < n; ++i)
      for (NodeId l = 0; l < n; ++l)
        if (a[l * n + i])
          for (NodeId j = 0; j < n; ++j) t[i * n + j] += p[l * n + j];
    p.swap(t);
  }
  std::uint64_t tr = 0;
  for (NodeId i = 0; i < n; ++i) tr += p[i * n + i];
  return tr;
}

// (A^p)_{uv} in exact integers.
inline std::uint64_t power_entry(const Graph& g, int p, NodeId u, NodeId v) {
  const NodeId n = g.num_nodes();
  std::vector<std::uint64_t> x(n, 0), y(n);
  x[u] = 1;
  for (int s = 0; s < p; ++s) {
    std::fill(y.begin(), y.end(), 0);
    for (const Edge& e : g.edges()) {
      y[e.u] += x[e.v];
      y[e.v] += x[e.u];
    }
    x.swap(y);
  }
  return x[v];
}

inline bool connected(NodeId n, const std::vector<Edge>& edges) {
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  NodeId parts = n;
  for (const Edge& e : edges) {
    const NodeId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --parts;
    }
  }
  return parts == 1;
}

// Canonical code of a graph on n <= 8 nodes: the smallest upper-triangle
// bitmask over all relabellings.
inline std::uint64_t canonical_code(NodeId n, const std::vector<Edge>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto bit = [n](int a, int b) {
    if (a > b) std::swap(a, b);
    return a * n + b;
  };
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    for (const Edge& e : edges) code |= std::uint64_t{1} << bit(perm[e.u], perm[e.v]);
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Every connected graph on exactly n nodes, one per isomorphism class.
inline std::vector<Graph> connected_graphs(NodeId n) {
  std::vector<Edge> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::set<std::uint64_t> seen;
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < static_cast<std::size_t>(n)) continue;
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    if (!connected(n, edges)) continue;
    if (!seen.insert(canonical_code(n, edges)).second) continue;
    out.push_back(Graph::from_pairs(n, edges));
  }
  return out;
}

}  // namespace srm::oracle
