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

#include "srm/greedy_walk.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "srm/adjacency.hpp"
#include "srm/errors.hpp"
#include "srm/spectral.hpp"
#include "srm/walks.hpp"

namespace srm {

int resolve_walk_length(const GreedyConfig& cfg, NodeId n,
                        double lambda_over_scale) {
  if (cfg.walk_length != 0) {
    if (cfg.walk_length < 2 || cfg.walk_length % 2 != 0) {
      throw ValidationError("walk length k must be even and >= 2, got " +
                            std::to_string(cfg.walk_length));
    }
    return cfg.walk_length;
  }
  if (!(cfg.epsilon > 0.0)) throw ValidationError("epsilon must be positive");
  const double logn = std::log(std::max<NodeId>(n, 2));
  int k = static_cast<int>(std::ceil(logn / std::log1p(cfg.epsilon / 3.0)));
  k = std::max(2, k + (k % 2));
  if (lambda_over_scale > 1.0) {
    const double room = std::log(1e280) - logn;
    const int cap = static_cast<int>(room / std::log(lambda_over_scale));
    k = std::max(2, std::min(k, cap - cap % 2));
  }
  return k;
}

CountingBackend resolve_backend(const GreedyConfig& cfg, NodeId n, EdgeId m) {
  if (cfg.backend != CountingBackend::kAuto) return cfg.backend;
  return (m <= 4 * static_cast<std::int64_t>(n) || n > 4096)
             ? CountingBackend::kDpLazy
             : CountingBackend::kMatrix;
}

namespace {

// One greedy run over edges or nodes of a scaled operator.
class GreedyRun {
 public:
  GreedyRun(const Graph& g, std::span<const double> weights, double scale,
            PlanKind kind, const GreedyConfig& cfg)
      : g_(g), kind_(kind), cfg_(cfg), adj_(g, weights, scale) {
    if (!(scale > 0.0)) throw ValidationError("threshold must be positive");
    PowerOptions po;
    po.tolerance = 1e-6;
    const double lam = g.num_edges() > 0 ? power_iteration(adj_, po).lambda1 : 0.0;
    k_ = resolve_walk_length(cfg, g.num_nodes(), lam * (1.0 + 1e-6));
    n_ = g.num_nodes();
    plan_.kind = kind;
    plan_.walk_length = k_;
    plan_.scale = scale;
    plan_.phase_names = {"greedy"};
  }

  RemovalPlan run(bool lazy) {
    if (n_ > 0) lazy ? run_lazy() : run_eager();
    return std::move(plan_);
  }

 private:
  int num_items() const {
    return kind_ == PlanKind::kEdge ? adj_.num_edge_ids() : n_;
  }
  bool alive(int i) const {
    return kind_ == PlanKind::kEdge ? adj_.edge_alive(i)
                                    : adj_.node_alive(i) && adj_.degree(i) > 0;
  }
  double cost(int i) const {
    return kind_ == PlanKind::kEdge ? g_.edge_cost(i) : g_.node_cost(i);
  }
  double coverage(const WalkTable& t, int i) const {
    return kind_ == PlanKind::kEdge
               ? 2.0 * k_ * adj_.weight(i) * t.per_edge[i]
               : k_ * t.per_node[i];
  }
  double score(double cov, double r, int i) const {
    const double c = (cfg_.clamp && r > 0.0) ? std::min(r, cov) : cov;
    return c / cost(i);
  }

  bool lambda_below_threshold() {
    PowerOptions po;
    po.start = warm_;
    auto rep = power_iteration(adj_, po);
    warm_ = std::move(rep.eigenvector);
    return rep.lambda1 < 1.0;
  }

  bool should_stop(double trace) {
    switch (cfg_.stop_rule) {
      case StopRule::kRootedTrace: return trace < n_;
      case StopRule::kLambdaDirect: return lambda_below_threshold();
      case StopRule::kBudgetOnly: return false;
    }
    return false;
  }

  bool fits_budget(int i) const {
    const double next = plan_.total_cost() + cost(i);
    return next <= cfg_.budget * (1.0 + 1e-12);
  }

  // Removes item i and returns the exact drop of the scaled trace.
  double remove(int i) {
    if (kind_ == PlanKind::kEdge) {
      const Edge e = adj_.edge(i);
      const double w = adj_.weight(i);
      adj_.remove_edge(i);
      plan_.add_edge(e, cost(i));
      return trace_drop_edge(adj_, e.u, e.v, w, k_);
    }
    std::vector<NodeId> nbrs;
    std::vector<double> w;
    auto ts = adj_.slot_targets(i);
    auto ws = adj_.slot_weights(i);
    for (std::size_t s = 0; s < ts.size(); ++s) {
      if (ws[s] == 0.0) continue;
      nbrs.push_back(ts[s]);
      w.push_back(ws[s]);
    }
    adj_.remove_node(i);
    plan_.add_node(i, cost(i));
    return trace_drop_node(adj_, nbrs, w, k_);
  }

  void remove_without_drop(int i) {
    if (kind_ == PlanKind::kEdge) {
      const Edge e = adj_.edge(i);
      adj_.remove_edge(i);
      plan_.add_edge(e, cost(i));
    } else {
      adj_.remove_node(i);
      plan_.add_node(i, cost(i));
    }
  }

  // Picks by the tie rule from exact scores; -1 if nothing is eligible.
  int pick_from_table(const WalkTable& t, double r) const {
    double best = -1.0;
    std::vector<double> s(num_items(), -1.0);
    for (int i = 0; i < num_items(); ++i) {
      if (!alive(i)) continue;
      const double cov = coverage(t, i);
      if (!(cov > 0.0)) continue;
      s[i] = score(cov, r, i);
      best = std::max(best, s[i]);
    }
    if (best < 0.0) return -1;
    const double cut = best * (1.0 - cfg_.tie_tolerance);
    for (int i = 0; i < num_items(); ++i) {
      if (s[i] >= 0.0 && s[i] >= cut) return i;
    }
    return -1;
  }

  void run_eager() {
    for (;;) {
      const WalkTable t = walk_table(adj_, k_);
      if (should_stop(t.total_rooted)) return;
      const int i = pick_from_table(t, t.total_rooted - n_);
      if (i < 0) {
        plan_.exhausted = true;
        return;
      }
      if (!fits_budget(i)) return;
      remove_without_drop(i);
    }
  }

  // Lazy evaluation. Heap keys are coverage / cost from the last refresh;
  // coverage only shrinks as the graph loses edges, so a key bounds the
  // current score from above under either scoring mode.
  struct Entry {
    double key;
    int id;
    std::uint32_t stamp;
    bool operator<(const Entry& o) const {
      return key != o.key ? key < o.key : id > o.id;
    }
  };

  void push(int i, double cov) {
    value_[i] = cov;
    heap_.push({cov / cost(i), i, ++stamp_[i]});
  }

  void resync() {
    const WalkTable t = walk_table(adj_, k_);
    trace_ = trace_ref_ = t.total_rooted;
    heap_ = {};
    for (int i = 0; i < num_items(); ++i) {
      fresh_[i] = iter_;
      if (!alive(i)) continue;
      const double cov = coverage(t, i);
      if (cov > 0.0) push(i, cov);
    }
  }

  // Recomputes coverage for i, plus every sibling edge at the same endpoint,
  // and raises best to the largest fresh score seen.
  void refresh(int i, double r, double& best) {
    if (kind_ == PlanKind::kEdge) {
      const Edge e = adj_.edge(i);
      NodeId x = e.u;
      if (adj_.degree(e.v) > adj_.degree(e.u)) x = e.v;
      walk_column(adj_, x, k_ - 1, column_);
      auto ts = adj_.slot_targets(x);
      auto ws = adj_.slot_weights(x);
      auto es = adj_.slot_edges(x);
      for (std::size_t s = 0; s < ts.size(); ++s) {
        if (ws[s] == 0.0) continue;
        const int f = es[s];
        const double cov = 2.0 * k_ * ws[s] * column_[ts[s]];
        push(f, cov);
        fresh_[f] = iter_;
        best = std::max(best, score(cov, r, f));
      }
      refresh_work_ += k_ - 1;
    } else {
      walk_column(adj_, i, k_ / 2, column_);
      double v = 0.0;
      for (double c : column_) v += c * c;
      const double cov = k_ * v;
      push(i, cov);
      fresh_[i] = iter_;
      best = std::max(best, score(cov, r, i));
      refresh_work_ += k_ / 2;
    }
  }

  int pick_lazy() {
    const double r = trace_ - n_;
    double best = -1.0;
    std::vector<Entry> held;
    refresh_work_ = 0;
    const double work_cap = 0.5 * n_ * (k_ - 1) + 8.0 * k_;
    while (!heap_.empty()) {
      const Entry top = heap_.top();
      if (!alive(top.id) || top.stamp != stamp_[top.id]) {
        heap_.pop();
        continue;
      }
      if (best >= 0.0 && top.key < best * (1.0 - cfg_.tie_tolerance)) break;
      heap_.pop();
      if (fresh_[top.id] == iter_) {
        held.push_back(top);
        best = std::max(best, score(value_[top.id], r, top.id));
      } else {
        refresh(top.id, r, best);
        if (refresh_work_ > work_cap) {
          // Too many near-ties for lazy evaluation to pay off.
          resync();
          ++stats_resyncs_;
          return pick_after_resync();
        }
      }
    }
    int winner = -1;
    const double cut = best * (1.0 - cfg_.tie_tolerance);
    for (const Entry& e : held) {
      if (score(value_[e.id], r, e.id) >= cut && (winner < 0 || e.id < winner)) {
        winner = e.id;
      }
    }
    for (const Entry& e : held) {
      if (e.id != winner) heap_.push(e);
    }
    return winner;
  }

  int pick_after_resync() {
    const double r = trace_ - n_;
    double best = -1.0;
    for (int i = 0; i < num_items(); ++i) {
      if (alive(i) && value_[i] > 0.0) best = std::max(best, score(value_[i], r, i));
    }
    if (best < 0.0) return -1;
    const double cut = best * (1.0 - cfg_.tie_tolerance);
    for (int i = 0; i < num_items(); ++i) {
      if (alive(i) && value_[i] > 0.0 && score(value_[i], r, i) >= cut) {
        return i;
      }
    }
    return -1;
  }

  bool near_threshold() const {
    // Subtractive tracking error grows with the last exact trace.
    return trace_ - n_ < 1e-10 * trace_ref_;
  }

  void run_lazy() {
    value_.assign(num_items(), 0.0);
    fresh_.assign(num_items(), -1);
    stamp_.assign(num_items(), 0);
    iter_ = 0;
    for (;;) {
      ++iter_;
      if (iter_ == 1 || (near_threshold() && trace_ != trace_ref_)) resync();
      if (should_stop(trace_)) return;
      const int i = pick_lazy();
      if (i < 0) {
        plan_.exhausted = true;
        return;
      }
      if (!fits_budget(i)) return;
      trace_ -= remove(i);
    }
  }

  const Graph& g_;
  PlanKind kind_;
  GreedyConfig cfg_;
  WeightedAdjacency adj_;
  int k_ = 2;
  NodeId n_ = 0;
  RemovalPlan plan_;
  std::vector<double> warm_;

  // Lazy state.
  std::priority_queue<Entry> heap_;
  std::vector<double> value_;
  std::vector<int> fresh_;
  std::vector<std::uint32_t> stamp_;
  std::vector<double> column_;
  int iter_ = 0;
  double trace_ = 0.0;
  double trace_ref_ = 0.0;
  double refresh_work_ = 0.0;
  int stats_resyncs_ = 0;
};

RemovalPlan run_greedy(const Graph& g, std::span<const double> weights,
                       double scale, PlanKind kind, const GreedyConfig& cfg,
                       bool lazy, const TrajectoryOptions& traj) {
  RemovalPlan plan = GreedyRun(g, weights, scale, kind, cfg).run(lazy);
  if (cfg.record_trajectory) record_trajectory(g, plan, traj);
  return plan;
}

}  // namespace

RemovalPlan greedy_walk_edges(const Graph& g, const GreedyConfig& cfg) {
  std::vector<double> ones(g.num_edges(), 1.0);
  const bool lazy = resolve_backend(cfg, g.num_nodes(), g.num_edges()) ==
                    CountingBackend::kDpLazy;
  return run_greedy(g, ones, cfg.threshold, PlanKind::kEdge, cfg, lazy, {});
}

RemovalPlan greedy_edge_choice_lazy(const Graph& g, const GreedyConfig& cfg) {
  std::vector<double> ones(g.num_edges(), 1.0);
  return run_greedy(g, ones, cfg.threshold, PlanKind::kEdge, cfg, true, {});
}

RemovalPlan greedy_walk_nodes(const Graph& g, const GreedyConfig& cfg) {
  std::vector<double> ones(g.num_edges(), 1.0);
  const bool lazy = resolve_backend(cfg, g.num_nodes(), g.num_edges()) ==
                    CountingBackend::kDpLazy;
  return run_greedy(g, ones, cfg.threshold, PlanKind::kNode, cfg, lazy, {});
}

RemovalPlan greedy_walk_nonuniform(const Graph& g, const TransmissionMatrix& b,
                                   const GreedyConfig& cfg) {
  b.validate(g);
  const bool lazy = resolve_backend(cfg, g.num_nodes(), g.num_edges()) ==
                    CountingBackend::kDpLazy;
  TrajectoryOptions traj;
  traj.weights = b.rates;
  return run_greedy(g, b.rates, b.recovery, PlanKind::kEdge, cfg, lazy, traj);
}

}  // namespace srm
