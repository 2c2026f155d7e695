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

#include "srm/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "srm/errors.hpp"
#include "srm/random.hpp"

namespace srm {
namespace {

double norm2(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

void normalize(std::span<double> x) {
  const double s = norm2(x);
  for (double& v : x) v /= s;
}

}  // namespace

SpectralReport power_iteration(const WeightedAdjacency& a,
                               const PowerOptions& opts) {
  SpectralReport rep;
  const NodeId n = a.num_nodes();
  if (n == 0) return rep;
  const double uniform = 1.0 / std::sqrt(static_cast<double>(n));
  if (a.num_live_edges() == 0) {
    rep.eigenvector.assign(n, uniform);
    return rep;
  }
  const std::int64_t max_iters =
      opts.max_iters > 0
          ? opts.max_iters
          : std::max<std::int64_t>(
                1000, static_cast<std::int64_t>(10.0 * n * std::log(n)));

  std::vector<double> x(n, uniform);
  if (static_cast<NodeId>(opts.start.size()) == n) {
    double s = 0.0;
    for (double v : opts.start) s += v * v;
    if (s > 0.0) {
      const double inv = 1.0 / std::sqrt(s);
      for (NodeId i = 0; i < n; ++i) {
        x[i] = std::abs(opts.start[i]) * inv + 0.1 * uniform;
      }
      normalize(x);
    }
  }

  std::vector<double> ax(n);
  std::vector<double> best_x;
  double best_lambda = 0.0;
  double best_residual = std::numeric_limits<double>::infinity();
  double shift = -1.0;
  double window_start_residual = best_residual;
  std::int64_t window_start = 0;
  int restarts = 0;
  SplitMix64 rng(opts.seed);

  std::int64_t it = 0;
  for (;;) {
    ++it;
    a.multiply(x, ax);
    double lambda = 0.0;
    for (NodeId i = 0; i < n; ++i) lambda += x[i] * ax[i];
    double residual = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(ax[i] - lambda * x[i]));
    }
    if (residual < best_residual) {
      best_residual = residual;
      best_lambda = lambda;
      best_x = x;
    }
    if (residual <= opts.tolerance || it >= max_iters) break;
    // The positive shift separates +lambda from -lambda on bipartite graphs.
    if (shift < 0.0) shift = 0.25 * std::max(lambda, 0.0);
    for (NodeId i = 0; i < n; ++i) x[i] = ax[i] + shift * x[i];
    const double s = norm2(x);
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw NumericOverflowError("power iteration diverged");
    }
    for (double& v : x) v /= s;

    if (it - window_start >= 1000) {
      if (best_residual > 0.5 * window_start_residual && restarts < 3) {
        // Stagnation: restart from a dense positive random vector.
        ++restarts;
        for (double& v : x) v = 0.5 + rng.uniform();
        normalize(x);
      }
      window_start = it;
      window_start_residual = best_residual;
    }
  }
  rep.lambda1 = best_lambda;
  rep.eigenvector = std::move(best_x);
  for (double& v : rep.eigenvector) v = std::abs(v);
  rep.iterations = it;
  rep.residual = best_residual;
  rep.converged = best_residual <= opts.tolerance;
  return rep;
}

SpectralReport power_iteration(const Graph& g, const PowerOptions& opts) {
  return power_iteration(WeightedAdjacency(g, 1.0), opts);
}

std::vector<double> pagerank(const Graph& g, double damping, double tolerance) {
  const NodeId n = g.num_nodes();
  if (n == 0) return {};
  std::vector<double> p(n, 1.0 / n), next(n);
  for (int it = 0; it < 10000; ++it) {
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      if (g.degree(v) == 0) dangling += p[v];
    }
    const double base = (1.0 - damping) / n + damping * dangling / n;
    for (NodeId v = 0; v < n; ++v) {
      double acc = 0.0;
      for (NodeId u : g.neighbors(v)) acc += p[u] / g.degree(u);
      next[v] = base + damping * acc;
    }
    double diff = 0.0;
    for (NodeId v = 0; v < n; ++v) diff += std::abs(next[v] - p[v]);
    p.swap(next);
    if (diff < tolerance) break;
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (double& v : p) v /= total;
  return p;
}

namespace {

std::uint64_t count_from(const Graph& g, NodeId x, NodeId root, int left) {
  if (left == 1) return g.has_edge(x, root) ? 1 : 0;
  std::uint64_t total = 0;
  for (NodeId y : g.neighbors(x)) total += count_from(g, y, root, left - 1);
  return total;
}

}  // namespace

std::uint64_t enumerate_closed_walks(const Graph& g, int k) {
  if (g.num_nodes() > 14 || k > 10) {
    throw SizeGuardError("closed-walk enumeration is limited to n <= 14, k <= 10");
  }
  if (k < 0) throw ValidationError("walk length must be nonnegative");
  if (k == 0) return static_cast<std::uint64_t>(g.num_nodes());
  std::uint64_t total = 0;
  for (NodeId r = 0; r < g.num_nodes(); ++r) total += count_from(g, r, r, k);
  return total;
}

}  // namespace srm
