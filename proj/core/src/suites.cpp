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

#include "srm/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "srm/adversarial.hpp"
#include "srm/brute_force.hpp"
#include "srm/errors.hpp"
#include "srm/generators.hpp"
#include "srm/greedy_walk.hpp"
#include "srm/heuristics.hpp"
#include "srm/random.hpp"
#include "srm/sis.hpp"
#include "srm/sparsifier.hpp"
#include "srm/spectral.hpp"
#include "srm/walks.hpp"

namespace srm {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SuiteCheck& c) { return c.passed; });
}

std::string SuiteReport::first_counterexample() const {
  for (const auto& c : checks) {
    if (!c.passed) return c.name + ": " + c.detail;
  }
  return {};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "oracles", "spectral-bounds", "adversarial", "sis-threshold",
      "pruning-bounds"};
  return names;
}

namespace {

std::string edges_text(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.num_nodes() << " edges=";
  for (const Edge& e : g.edges()) os << e.u << '-' << e.v << ' ';
  return os.str();
}

double lambda_of(const Graph& g) {
  PowerOptions po;
  po.tolerance = 1e-9;
  return power_iteration(g, po).lambda1;
}

SuiteReport oracles(const SuiteOptions& o) {
  SuiteReport r{"oracles", {}};
  SuiteCheck trace{"trace equals enumerated closed walks", true, ""};
  SuiteCheck dp{"walk_count_dp equals matrix entry", true, ""};
  SplitMix64 rng(o.seed);
  int compared = 0;
  for (int i = 0; i < o.graphs; ++i) {
    const auto n = static_cast<NodeId>(4 + rng.below(9));
    const double p = 0.3 + 0.3 * rng.uniform();
    const Graph g = erdos_renyi_gnp(n, p, rng.next());
    for (int k : {2, 4, 6, 8}) {
      const WalkTable t = walk_table_matrix(g, k, 1.0);
      const auto exact = enumerate_closed_walks(g, k);
      if (trace.passed && t.total_rooted != static_cast<double>(exact)) {
        trace.passed = false;
        trace.detail = edges_text(g) + " k=" + std::to_string(k);
      }
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const double v = walk_count_dp(g, g.edge(e), k, 1.0);
        ++compared;
        if (dp.passed && v != t.per_edge[e]) {
          dp.passed = false;
          dp.detail = edges_text(g) + " k=" + std::to_string(k) + " edge " +
                      to_string(g.edge(e));
        }
      }
    }
  }
  if (trace.passed) trace.detail = std::to_string(o.graphs) + " graphs";
  if (dp.passed) dp.detail = std::to_string(compared) + " entries";
  r.checks = {trace, dp};
  return r;
}

SuiteReport spectral_bounds(const SuiteOptions& o) {
  SuiteReport r{"spectral-bounds", {}};
  SuiteCheck lower{"sqrt(max degree) and average degree bound lambda1", true, ""};
  SuiteCheck post{"greedy residual lambda1 <= (nk)^(1/k) T", true, ""};
  SplitMix64 rng(o.seed);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const auto n = static_cast<NodeId>(20 + rng.below(60));
    const Graph g = erdos_renyi_gnp(n, 4.0 / n + 0.05 * rng.uniform(), rng.next());
    const double lam = lambda_of(g);
    const double avg = 2.0 * g.num_edges() / n;
    if (std::sqrt(g.max_degree()) > lam + 1e-9 || avg > lam + 1e-9) {
      lower.passed = false;
      lower.detail = edges_text(g);
    }
    GreedyConfig cfg;
    cfg.threshold = 0.5 * lam;
    cfg.record_trajectory = false;
    const RemovalPlan plan = greedy_walk_edges(g, cfg);
    const double res = lambda_of(residual_graph(g, plan));
    const int k = plan.walk_length;
    const double bound = std::pow(static_cast<double>(n) * k, 1.0 / k) * cfg.threshold;
    worst = std::max(worst, res / cfg.threshold);
    if (res > bound + 1e-6) {
      post.passed = false;
      std::ostringstream os;
      os << "residual " << res << " > bound " << bound << " for " << edges_text(g);
      post.detail = os.str();
    }
  }
  if (lower.passed) lower.detail = "10 graphs";
  if (post.passed) {
    std::ostringstream os;
    os << "10 graphs, max residual/T " << worst;
    post.detail = os.str();
  }
  r.checks = {lower, post};
  return r;
}

SuiteReport adversarial(const SuiteOptions& o) {
  SuiteReport r{"adversarial", {}};
  const int tp = o.t_prime;
  const auto inst = make_adversarial(tp, 3 * tp);
  {
    const double lam = lambda_of(remove_edges(inst.graph, inst.witness_edges));
    std::ostringstream os;
    os << "witness of " << inst.witness_edges.size() << " edges leaves lambda1 "
       << lam << " (T'=" << tp << ")";
    r.checks.push_back({"witness drives lambda1 below T'", lam < tp, os.str()});
  }
  StopCriterion stop;
  stop.threshold = tp;
  HeuristicOptions stat{false, 1e-9};
  const std::pair<const char*, RemovalPlan> runs[] = {
      {"productdegree", product_degree_plan(inst.graph, stop, stat)},
      {"eigenscore", eigen_score_plan(inst.graph, stop, stat)},
      {"linepagerank", line_pagerank_plan(inst.graph, stop, stat)},
      {"hybrid", hybrid_plan(inst.graph, stop)},
  };
  for (const auto& [name, plan] : runs) {
    std::ostringstream os;
    os << name << " removed " << plan.size() << " edges, q=" << inst.q;
    r.checks.push_back({std::string(name) + " removes at least q edges",
                        static_cast<int>(plan.size()) >= inst.q, os.str()});
  }
  return r;
}

SuiteReport sis_threshold(const SuiteOptions& o) {
  SuiteReport r{"sis-threshold", {}};
  const Graph g = erdos_renyi_gnp(200, 0.03, o.seed);
  const double lam = lambda_of(g);
  std::vector<NodeId> all(g.num_nodes());
  std::iota(all.begin(), all.end(), 0);
  const double horizon = 100.0;
  const auto sub = sis_simulate(g, 0.8 / lam, 1.0, all, horizon, 200, o.seed);
  const auto sup = sis_simulate(g, 1.5 / lam, 1.0, all, horizon, 200, o.seed);
  const double a = sub.median_with_censoring();
  const double b = sup.median_with_censoring();
  std::ostringstream os;
  os << "median subcritical " << a << ", supercritical " << b;
  r.checks.push_back({"subcritical median <= 0.2 x supercritical", a <= 0.2 * b,
                      os.str()});
  return r;
}

SuiteReport pruning_bounds(const SuiteOptions& o) {
  SuiteReport r{"pruning-bounds", {}};
  SuiteCheck c1{"c(E1) <= 2 OPT", true, ""};
  SuiteCheck c2{"c(E2) <= 2 OPT", true, ""};
  SplitMix64 rng(o.seed);
  int tested = 0;
  while (tested < 30) {
    const auto n = static_cast<NodeId>(5 + rng.below(3));
    const Graph g = erdos_renyi_gnp(n, 0.5 + 0.3 * rng.uniform(), rng.next());
    if (g.num_edges() == 0 || g.num_edges() > 14) continue;
    ++tested;
    const double t = 0.6 * lambda_of(g);
    const auto opt = brute_force_srm(g, t, PlanKind::kEdge);
    const auto p1 = max_degree_reduction(g, t);
    const auto p2 = density_reduction(p1.residual, t);
    if (p1.removed.size() > 2 * opt.cost + 1e-9) {
      c1.passed = false;
      c1.detail = edges_text(g);
    }
    if (p2.removed.size() > 2 * opt.cost + 1e-9) {
      c2.passed = false;
      c2.detail = edges_text(g);
    }
  }
  if (c1.passed) c1.detail = std::to_string(tested) + " graphs";
  if (c2.passed) c2.detail = std::to_string(tested) + " graphs";
  r.checks = {c1, c2};
  return r;
}

}  // namespace

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "oracles") return oracles(opts);
  if (name == "spectral-bounds") return spectral_bounds(opts);
  if (name == "adversarial") return adversarial(opts);
  if (name == "sis-threshold") return sis_threshold(opts);
  if (name == "pruning-bounds") return pruning_bounds(opts);
  throw ValidationError("unknown suite '" + name + "'");
}

}  // namespace srm
