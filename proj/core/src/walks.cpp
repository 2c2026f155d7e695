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

#include "srm/walks.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "srm/errors.hpp"

namespace srm {
namespace {

constexpr int kBlock = 8;

void check_k(int k) {
  if (k < 2 || k % 2 != 0) {
    throw ValidationError("walk length k must be even and >= 2, got " +
                          std::to_string(k));
  }
}

// Greedy vertex cover of the live edges, highest degree first.
std::vector<NodeId> vertex_cover(const WeightedAdjacency& a) {
  const NodeId n = a.num_nodes();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    return a.degree(x) > a.degree(y);
  });
  std::vector<std::uint8_t> covered(a.num_edge_ids(), 0);
  std::vector<NodeId> cover;
  for (NodeId v : order) {
    if (a.degree(v) == 0) break;
    bool needed = false;
    auto ws = a.slot_weights(v);
    auto es = a.slot_edges(v);
    for (std::size_t s = 0; s < ws.size(); ++s) {
      if (ws[s] != 0.0 && !covered[es[s]]) {
        covered[es[s]] = 1;
        needed = true;
      }
    }
    if (needed) cover.push_back(v);
  }
  return cover;
}

void fill_nodes_from_edges(const WeightedAdjacency& a, WalkTable& t) {
  for (NodeId v = 0; v < a.num_nodes(); ++v) {
    auto ws = a.slot_weights(v);
    auto es = a.slot_edges(v);
    double acc = 0.0;
    for (std::size_t s = 0; s < ws.size(); ++s) acc += ws[s] * t.per_edge[es[s]];
    t.per_node[v] = acc;
  }
}

void dense_table(const WeightedAdjacency& a, int k, WalkTable& t) {
  const NodeId n = a.num_nodes();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (NodeId v = 0; v < n; ++v) {
    auto ts = a.slot_targets(v);
    auto ws = a.slot_weights(v);
    for (std::size_t s = 0; s < ts.size(); ++s) m(ts[s], v) = ws[s];
  }
  // p = m^(k-1) by binary exponentiation.
  int e = k - 1;
  Eigen::MatrixXd p;
  Eigen::MatrixXd base = m;
  bool have = false;
  while (e > 0) {
    if (e & 1) {
      if (have) {
        Eigen::MatrixXd tmp = p * base;
        p.swap(tmp);
      } else {
        p = base;
        have = true;
      }
    }
    e >>= 1;
    if (e > 0) {
      Eigen::MatrixXd tmp = base * base;
      base.swap(tmp);
    }
  }
  for (EdgeId id = 0; id < a.num_edge_ids(); ++id) {
    if (a.edge_alive(id)) t.per_edge[id] = p(a.edge(id).u, a.edge(id).v);
  }
}

void sparse_table(const WeightedAdjacency& a, int k,
                  const std::vector<NodeId>& cover, WalkTable& t) {
  const NodeId n = a.num_nodes();
  std::vector<double> x(static_cast<std::size_t>(n) * kBlock);
  std::vector<double> y(x.size());
  for (std::size_t start = 0; start < cover.size(); start += kBlock) {
    const int cols = static_cast<int>(
        std::min<std::size_t>(kBlock, cover.size() - start));
    std::fill(x.begin(), x.end(), 0.0);
    for (int c = 0; c < cols; ++c) {
      x[static_cast<std::size_t>(cover[start + c]) * kBlock + c] = 1.0;
    }
    for (int step = 0; step < k - 1; ++step) {
      a.multiply_block(x.data(), y.data(), kBlock);
      x.swap(y);
    }
    for (int c = 0; c < cols; ++c) {
      const NodeId v = cover[start + c];
      auto ts = a.slot_targets(v);
      auto ws = a.slot_weights(v);
      auto es = a.slot_edges(v);
      for (std::size_t s = 0; s < ts.size(); ++s) {
        if (ws[s] == 0.0) continue;
        t.per_edge[es[s]] = x[static_cast<std::size_t>(ts[s]) * kBlock + c];
      }
    }
  }
}

void check_finite(const WalkTable& t) {
  auto bad = [](double v) { return !std::isfinite(v); };
  if (!std::isfinite(t.total_rooted) ||
      std::any_of(t.per_edge.begin(), t.per_edge.end(), bad)) {
    throw NumericOverflowError(
        "closed-walk counts overflowed; use a larger scale or a smaller k");
  }
}

}  // namespace

WalkTable walk_table(const WeightedAdjacency& a, int k) {
  check_k(k);
  WalkTable t;
  t.k = k;
  t.per_edge.assign(a.num_edge_ids(), 0.0);
  t.per_node.assign(a.num_nodes(), 0.0);
  if (a.num_live_edges() == 0) return t;

  const auto cover = vertex_cover(a);
  const double n = a.num_nodes();
  const int mults = std::bit_width(static_cast<unsigned>(k - 1)) - 1 +
                    std::popcount(static_cast<unsigned>(k - 1)) - 1;
  const double dense_cost = 2.0 * n * n * n * std::max(mults, 1);
  // Sparse products are memory bound; weight them against dense flops.
  const double sparse_cost = 8.0 * static_cast<double>(cover.size()) /
                             kBlock * (k - 1) *
                             (2.0 * a.num_live_edges() * kBlock + n);
  if (n <= 4096 && dense_cost < sparse_cost) {
    dense_table(a, k, t);
  } else {
    sparse_table(a, k, cover, t);
  }
  fill_nodes_from_edges(a, t);
  t.total_rooted = std::accumulate(t.per_node.begin(), t.per_node.end(), 0.0);
  check_finite(t);
  return t;
}

WalkTable walk_table_matrix(const Graph& g, int k, double scale) {
  WalkTable t = walk_table(WeightedAdjacency(g, scale), k);
  t.scale = scale;
  return t;
}

double walk_count_dp(const Graph& g, Edge e, int k, double scale) {
  if (k < 2) throw ValidationError("walk length k must be >= 2");
  if (!g.has_edge(e.u, e.v)) {
    throw ValidationError("edge " + to_string(e) + " is not in the graph");
  }
  // h(x, l): scaled count of length-l walks from v ending at x.
  std::vector<double> h(g.num_nodes(), 0.0), next(g.num_nodes());
  h[e.v] = 1.0;
  const double inv = 1.0 / scale;
  for (int l = 1; l <= k - 1; ++l) {
    for (NodeId x = 0; x < g.num_nodes(); ++x) {
      double acc = 0.0;
      for (NodeId y : g.neighbors(x)) acc += h[y];
      next[x] = acc * inv;
    }
    h.swap(next);
  }
  if (!std::isfinite(h[e.u])) {
    throw NumericOverflowError("walk count overflowed; use a larger scale");
  }
  return h[e.u];
}

void walk_column(const WeightedAdjacency& a, NodeId v, int steps,
                 std::vector<double>& out) {
  out.assign(a.num_nodes(), 0.0);
  out[v] = 1.0;
  std::vector<double> tmp(a.num_nodes());
  for (int s = 0; s < steps; ++s) {
    a.multiply(out, tmp);
    out.swap(tmp);
  }
}

namespace {

// k [t^k] log d(t) for a power series with d_0 = 1.
double log_coefficient_times_k(const std::vector<double>& d, int k) {
  std::vector<double> l(k + 1, 0.0);
  for (int i = 1; i <= k; ++i) {
    double acc = 0.0;
    for (int j = 1; j < i; ++j) acc += j * l[j] * d[i - j];
    l[i] = d[i] - acc / i;
  }
  return k * l[k];
}

}  // namespace

double trace_drop_edge(const WeightedAdjacency& after, NodeId i, NodeId j,
                       double w, int k) {
  check_k(k);
  const NodeId n = after.num_nodes();
  std::vector<double> x(static_cast<std::size_t>(n) * 2, 0.0), y(x.size());
  x[2 * static_cast<std::size_t>(i)] = 1.0;
  x[2 * static_cast<std::size_t>(j) + 1] = 1.0;
  // g_xy[l] = (At'^l)_{xy}.
  std::vector<double> gii(k), gjj(k), gij(k);
  for (int l = 0; l < k; ++l) {
    gii[l] = x[2 * static_cast<std::size_t>(i)];
    gij[l] = x[2 * static_cast<std::size_t>(j)];
    gjj[l] = x[2 * static_cast<std::size_t>(j) + 1];
    if (l + 1 < k) {
      after.multiply_block(x.data(), y.data(), 2);
      x.swap(y);
    }
  }
  // det factor D(t) = (1 - t w g_ij)^2 - t^2 w^2 g_ii g_jj.
  std::vector<double> p(k + 1, 0.0);
  for (int l = 1; l <= k; ++l) p[l] = w * gij[l - 1];
  std::vector<double> d(k + 1, 0.0);
  d[0] = 1.0;
  for (int l = 1; l <= k; ++l) {
    double sq = 0.0;
    for (int a = 1; a < l; ++a) sq += p[a] * p[l - a];
    double q = 0.0;
    for (int a = 0; a <= l - 2; ++a) q += gii[a] * gjj[l - 2 - a];
    d[l] = -2.0 * p[l] + sq - w * w * q;
  }
  return -log_coefficient_times_k(d, k);
}

double trace_drop_node(const WeightedAdjacency& after,
                       const std::vector<NodeId>& nbrs,
                       const std::vector<double>& w, int k) {
  check_k(k);
  const NodeId n = after.num_nodes();
  std::vector<double> b(n, 0.0), y(n, 0.0), tmp(n);
  for (std::size_t s = 0; s < nbrs.size(); ++s) b[nbrs[s]] = w[s];
  y = b;
  // h[l] = b^T At'^l b; D(t) = 1 - t^2 h(t).
  std::vector<double> d(k + 1, 0.0);
  d[0] = 1.0;
  for (int l = 0; l + 2 <= k; ++l) {
    double h = 0.0;
    for (NodeId v : nbrs) h += b[v] * y[v];
    d[l + 2] = -h;
    if (l + 3 <= k) {
      after.multiply(y, tmp);
      y.swap(tmp);
    }
  }
  return -log_coefficient_times_k(d, k);
}

}  // namespace srm
