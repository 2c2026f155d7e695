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

#include "srm/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "srm/adjacency.hpp"
#include "srm/errors.hpp"
#include "srm/spectral.hpp"

namespace srm {
namespace {

constexpr double kTie = 1e-9;

// Shared loop state: residual operator, running plan and warm eigenpair.
class Driver {
 public:
  Driver(const Graph& g, PlanKind kind, const StopCriterion& stop, double tol)
      : g_(g), stop_(stop), adj_(g, 1.0) {
    po_.tolerance = tol;
    plan_.kind = kind;
    plan_.phase_names = {"heuristic"};
    auto rep = power_iteration(adj_, po_);
    lambda_ = rep.lambda1;
    x_ = std::move(rep.eigenvector);
    plan_.lambda_trajectory.push_back(lambda_);
  }

  const WeightedAdjacency& adj() const { return adj_; }
  const std::vector<double>& eigenvector() const { return x_; }
  double lambda() const { return lambda_; }

  bool below_threshold() const {
    return stop_.threshold > 0.0 && lambda_ < stop_.threshold;
  }
  bool fits(double cost) const {
    return plan_.total_cost() + cost <= stop_.budget * (1.0 + 1e-12);
  }

  // lambda1 and eigenvector of the residual after also removing edge id.
  SpectralReport probe_edge(EdgeId id) const {
    WeightedAdjacency trial = adj_;
    trial.remove_edge(id);
    PowerOptions po = po_;
    po.start = x_;
    return power_iteration(trial, po);
  }

  void remove_edge(EdgeId id) {
    adj_.remove_edge(id);
    plan_.add_edge(g_.edge(id), g_.edge_cost(id));
    update();
  }
  void remove_edge(EdgeId id, SpectralReport rep) {
    adj_.remove_edge(id);
    plan_.add_edge(g_.edge(id), g_.edge_cost(id));
    accept(std::move(rep));
  }
  void remove_node(NodeId v) {
    adj_.remove_node(v);
    plan_.add_node(v, g_.node_cost(v));
    update();
  }

  void mark_exhausted() { plan_.exhausted = true; }
  RemovalPlan finish() { return std::move(plan_); }

 private:
  void update() {
    PowerOptions po = po_;
    po.start = x_;
    accept(power_iteration(adj_, po));
  }
  void accept(SpectralReport rep) {
    lambda_ = rep.lambda1;
    x_ = std::move(rep.eigenvector);
    plan_.lambda_trajectory.push_back(lambda_);
  }

  const Graph& g_;
  StopCriterion stop_;
  WeightedAdjacency adj_;
  PowerOptions po_;
  RemovalPlan plan_;
  double lambda_ = 0.0;
  std::vector<double> x_;
};

// Index of the best live item: largest score, ties (relative kTie) to the
// smallest index. -1 when nothing is live.
template <class Live, class Score>
int argmax_by_id(int count, Live live, Score score) {
  double best = -1.0;
  std::vector<double> s(count, -1.0);
  for (int i = 0; i < count; ++i) {
    if (!live(i)) continue;
    s[i] = score(i);
    best = std::max(best, s[i]);
  }
  if (best < 0.0) return -1;
  const double cut = best - kTie * std::abs(best);
  for (int i = 0; i < count; ++i) {
    if (s[i] >= 0.0 && s[i] >= cut) return i;
  }
  return -1;
}

// Items sorted by nonincreasing score. Runs of scores within a relative
// kTie of the run's first score count as tied and are ordered by id.
std::vector<EdgeId> static_order(const std::vector<double>& score) {
  std::vector<EdgeId> order(score.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return score[a] > score[b]; });
  for (std::size_t lo = 0; lo < order.size();) {
    const double cut = score[order[lo]] - kTie * std::abs(score[order[lo]]);
    std::size_t hi = lo + 1;
    while (hi < order.size() && score[order[hi]] >= cut) ++hi;
    std::sort(order.begin() + lo, order.begin() + hi);
    lo = hi;
  }
  return order;
}

RemovalPlan run_static(const Graph& g, const StopCriterion& stop, double tol,
                       const std::vector<EdgeId>& order) {
  Driver d(g, PlanKind::kEdge, stop, tol);
  std::size_t next = 0;
  while (!d.below_threshold()) {
    if (next == order.size()) {
      d.mark_exhausted();
      break;
    }
    const EdgeId id = order[next++];
    if (!d.fits(g.edge_cost(id))) break;
    d.remove_edge(id);
  }
  return d.finish();
}

template <class Score>
RemovalPlan run_dynamic_edges(const Graph& g, const StopCriterion& stop,
                              double tol, Score score) {
  Driver d(g, PlanKind::kEdge, stop, tol);
  while (!d.below_threshold()) {
    const int id = argmax_by_id(
        g.num_edges(), [&](int e) { return d.adj().edge_alive(e); },
        [&](int e) { return score(d, e); });
    if (id < 0) {
      d.mark_exhausted();
      break;
    }
    if (!d.fits(g.edge_cost(id))) break;
    d.remove_edge(id);
  }
  return d.finish();
}

double degree_product(const WeightedAdjacency& a, EdgeId e) {
  return static_cast<double>(a.degree(a.edge(e).u)) * a.degree(a.edge(e).v);
}

double eigen_product(const std::vector<double>& x, const Edge& e) {
  return std::abs(x[e.u] * x[e.v]);
}

std::vector<double> initial_degree_scores(const Graph& g) {
  std::vector<double> s(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    s[e] = static_cast<double>(g.degree(g.edge(e).u)) * g.degree(g.edge(e).v);
  }
  return s;
}

std::vector<double> initial_eigen_scores(const Graph& g, double tol) {
  PowerOptions po;
  po.tolerance = tol;
  const auto x = power_iteration(g, po).eigenvector;
  std::vector<double> s(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) s[e] = eigen_product(x, g.edge(e));
  return s;
}

}  // namespace

RemovalPlan product_degree_plan(const Graph& g, const StopCriterion& stop,
                                const HeuristicOptions& opts) {
  if (!opts.dynamic) {
    return run_static(g, stop, opts.tolerance,
                      static_order(initial_degree_scores(g)));
  }
  return run_dynamic_edges(g, stop, opts.tolerance,
                           [](const Driver& d, EdgeId e) {
                             return degree_product(d.adj(), e);
                           });
}

RemovalPlan eigen_score_plan(const Graph& g, const StopCriterion& stop,
                             const HeuristicOptions& opts) {
  if (!opts.dynamic) {
    return run_static(g, stop, opts.tolerance,
                      static_order(initial_eigen_scores(g, opts.tolerance)));
  }
  return run_dynamic_edges(g, stop, opts.tolerance,
                           [](const Driver& d, EdgeId e) {
                             return eigen_product(d.eigenvector(),
                                                  d.adj().edge(e));
                           });
}

RemovalPlan line_pagerank_plan(const Graph& g, const StopCriterion& stop,
                               const HeuristicOptions& opts) {
  if (g.num_edges() == 0) {
    throw ValidationError("line-graph PageRank needs at least one edge");
  }
  if (!opts.dynamic) {
    return run_static(g, stop, opts.tolerance,
                      static_order(pagerank(line_graph(g))));
  }
  return run_dynamic_edges(
      g, stop, opts.tolerance,
      [&g, cache = std::vector<double>(), cached_step = std::size_t(-1)](
          const Driver& d, EdgeId e) mutable {
        const std::size_t step = g.num_edges() - d.adj().num_live_edges();
        if (step != cached_step) {
          // Line graph of the residual, mapped back to original edge ids.
          std::vector<EdgeId> live;
          std::vector<Edge> gone;
          for (EdgeId id = 0; id < g.num_edges(); ++id) {
            if (d.adj().edge_alive(id)) {
              live.push_back(id);
            } else {
              gone.push_back(g.edge(id));
            }
          }
          const auto pr = pagerank(line_graph(remove_edges(g, gone)));
          cache.assign(g.num_edges(), 0.0);
          for (std::size_t i = 0; i < live.size(); ++i) cache[live[i]] = pr[i];
          cached_step = step;
        }
        return cache[e];
      });
}

RemovalPlan hybrid_plan(const Graph& g, const StopCriterion& stop,
                        double tolerance) {
  if (g.num_edges() == 0) throw ValidationError("hybrid needs at least one edge");
  const auto pi = static_order(initial_eigen_scores(g, tolerance));
  const auto mu = static_order(initial_degree_scores(g));
  Driver d(g, PlanKind::kEdge, stop, tolerance);
  std::size_t i = 0, j = 0;
  while (!d.below_threshold()) {
    while (i < pi.size() && !d.adj().edge_alive(pi[i])) ++i;
    while (j < mu.size() && !d.adj().edge_alive(mu[j])) ++j;
    if (i == pi.size() && j == mu.size()) {
      d.mark_exhausted();
      break;
    }
    EdgeId pick;
    SpectralReport rep;
    if (j == mu.size() || (i < pi.size() && pi[i] == mu[j])) {
      pick = pi[i];
      rep = d.probe_edge(pick);
      ++i;
    } else if (i == pi.size()) {
      pick = mu[j];
      rep = d.probe_edge(pick);
      ++j;
    } else {
      auto a = d.probe_edge(pi[i]);
      auto b = d.probe_edge(mu[j]);
      if (b.lambda1 < a.lambda1 - 1e-9 * a.lambda1) {
        pick = mu[j++];
        rep = std::move(b);
      } else {
        pick = pi[i++];
        rep = std::move(a);
      }
    }
    if (!d.fits(g.edge_cost(pick))) break;
    d.remove_edge(pick, std::move(rep));
  }
  return d.finish();
}

RemovalPlan node_heuristic_plan(const Graph& g, NodeScorer scorer,
                                const StopCriterion& stop, double tolerance) {
  Driver d(g, PlanKind::kNode, stop, tolerance);
  while (!d.below_threshold()) {
    const int v = argmax_by_id(
        g.num_nodes(),
        [&](int u) { return d.adj().node_alive(u) && d.adj().degree(u) > 0; },
        [&](int u) {
          return scorer == NodeScorer::kDegree
                     ? static_cast<double>(d.adj().degree(u))
                     : std::abs(d.eigenvector()[u]);
        });
    if (v < 0) {
      d.mark_exhausted();
      break;
    }
    if (!d.fits(g.node_cost(v))) break;
    d.remove_node(v);
  }
  return d.finish();
}

}  // namespace srm
