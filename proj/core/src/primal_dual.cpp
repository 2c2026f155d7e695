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

#include "srm/primal_dual.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "srm/adjacency.hpp"
#include "srm/spectral.hpp"
#include "srm/walks.hpp"

namespace srm {

CoverState primal_dual_cover(const Graph& g, std::span<const double> costs,
                             double sigma, const CoverOptions& opts) {
  if (static_cast<EdgeId>(costs.size()) != g.num_edges()) {
    throw ValidationError("cost vector does not match the edge count");
  }
  if (sigma < 0.0) throw ValidationError("sigma must be nonnegative");
  const int k = opts.k;
  WeightedAdjacency adj(g, opts.scale);
  CoverState st;
  st.z.assign(g.num_edges(), 0.0);
  st.target_sigma = sigma;

  WalkTable t = walk_table(adj, k);
  double current = t.total_rooted;
  for (EdgeId id : opts.forced) {
    adj.remove_edge(id);
    st.picked.push_back(id);
  }
  if (!opts.forced.empty()) {
    t = walk_table(adj, k);
    st.covered += current - t.total_rooted;
    current = t.total_rooted;
  }

  auto done = [&] {
    if (opts.residual_target >= 0.0) return current <= opts.residual_target;
    return st.covered >= sigma;
  };
  while (!done()) {
    double x = std::numeric_limits<double>::infinity();
    std::vector<double> cov(g.num_edges(), 0.0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (!adj.edge_alive(e) || !std::isfinite(costs[e])) continue;
      cov[e] = 2.0 * k * adj.weight(e) * t.per_edge[e];
      if (cov[e] > 0.0) x = std::min(x, (costs[e] - st.z[e]) / cov[e]);
    }
    if (!std::isfinite(x)) {
      throw CoverUnreachable("walk mass " + std::to_string(sigma) +
                                 " cannot be covered by the eligible edges",
                             st);
    }
    x = std::max(x, 0.0);
    // Tight edges: the smallest id whose ratio attains the minimum.
    EdgeId pick = -1;
    const double tol = 1e-9 * std::max(x, 1e-300);
    for (EdgeId e = 0; e < g.num_edges() && pick < 0; ++e) {
      if (cov[e] > 0.0 && (costs[e] - st.z[e]) / cov[e] <= x + tol) pick = e;
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (cov[e] > 0.0) st.z[e] = std::min(costs[e], st.z[e] + x * cov[e]);
    }
    st.z[pick] = costs[pick];
    adj.remove_edge(pick);
    st.picked.push_back(pick);
    t = walk_table(adj, k);
    st.covered += current - t.total_rooted;
    current = t.total_rooted;
  }
  return st;
}

namespace {

RemovalPlan plan_from_picks(const Graph& g, const std::vector<EdgeId>& picks,
                            double budget) {
  RemovalPlan plan;
  plan.kind = PlanKind::kEdge;
  plan.phase_names = {"primal-dual"};
  for (EdgeId id : picks) {
    if (plan.total_cost() + g.edge_cost(id) > budget * (1.0 + 1e-12)) break;
    plan.add_edge(g.edge(id), g.edge_cost(id));
  }
  return plan;
}

double cost_of(const Graph& g, const std::vector<EdgeId>& ids) {
  double c = 0.0;
  for (EdgeId id : ids) c += g.edge_cost(id);
  return c;
}

}  // namespace

RemovalPlan hit_walks(const Graph& g, const GreedyConfig& cfg,
                      const HitWalksOptions& opts) {
  const double scale = cfg.threshold;
  if (!(scale > 0.0)) throw ValidationError("threshold must be positive");
  CoverOptions co;
  co.scale = scale;
  co.residual_target = g.num_nodes();
  {
    PowerOptions po;
    po.tolerance = 1e-6;
    const double lam = power_iteration(g, po).lambda1;
    co.k = resolve_walk_length(cfg, g.num_nodes(), lam / scale * (1.0 + 1e-6));
  }
  const WalkTable t0 = walk_table_matrix(g, co.k, scale);
  const double sigma = std::max(0.0, t0.total_rooted - g.num_nodes());

  std::vector<double> costs(g.edge_costs().begin(), g.edge_costs().end());
  std::vector<EdgeId> best = primal_dual_cover(g, costs, sigma, co).picked;
  double best_cost = cost_of(g, best);

  if (opts.mode == HitWalksMode::kFull && sigma > 0.0) {
    if (g.num_edges() > opts.full_mode_max_edges) {
      throw SizeGuardError("full HitWalks is limited to " +
                           std::to_string(opts.full_mode_max_edges) +
                           " edges");
    }
    std::vector<EdgeId> order(g.num_edges());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
      return g.edge_cost(a) < g.edge_cost(b);
    });
    const double inf = std::numeric_limits<double>::infinity();
    for (EdgeId ej : order) {
      std::vector<double> c(g.num_edges(), inf);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (e != ej && g.edge_cost(e) <= g.edge_cost(ej)) c[e] = g.edge_cost(e);
      }
      const EdgeId forced[] = {ej};
      co.forced = forced;
      try {
        auto cand = primal_dual_cover(g, c, sigma, co).picked;
        const double cc = cost_of(g, cand);
        if (cc < best_cost * (1.0 - 1e-12)) {
          best = std::move(cand);
          best_cost = cc;
        }
      } catch (const CoverUnreachable&) {
        // This prefix cannot reach sigma.
      }
    }
  }
  RemovalPlan plan = plan_from_picks(g, best, cfg.budget);
  plan.walk_length = co.k;
  plan.scale = scale;
  if (cfg.record_trajectory) record_trajectory(g, plan);
  return plan;
}

}  // namespace srm
