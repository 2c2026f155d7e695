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

#include <limits>

#include "srm/graph.hpp"
#include "srm/io.hpp"
#include "srm/plan.hpp"

namespace srm {

enum class CountingBackend {
  kAuto,    // kDpLazy when m <= 4n or n > 4096, else kMatrix
  kMatrix,  // full walk table every iteration
  kDpLazy,  // lazy evaluation of stale upper bounds
};

enum class StopRule {
  kRootedTrace,   // stop once trace((A/T)^k) < n
  kLambdaDirect,  // stop once lambda1 < T
  kBudgetOnly,    // run until the budget or the items run out
};

struct GreedyConfig {
  double threshold = 1.0;  // T
  double epsilon = 0.05;
  int walk_length = 0;  // even; 0 selects the automatic length
  CountingBackend backend = CountingBackend::kAuto;
  StopRule stop_rule = StopRule::kRootedTrace;
  // Score min{r, coverage} / cost instead of coverage / cost.
  bool clamp = true;
  // Cumulative cost limit. The run stops before an item that would exceed it.
  double budget = std::numeric_limits<double>::infinity();
  bool record_trajectory = true;
  // Scores within this relative distance of the best count as tied; the
  // smallest id among them wins.
  double tie_tolerance = 1e-9;
};

// Smallest even k >= log n / log(1 + epsilon / 3), at least 2, unless
// walk_length is set. When lambda_over_scale > 1 the automatic value is
// lowered so that n (lambda / scale)^k stays below 1e280.
int resolve_walk_length(const GreedyConfig& cfg, NodeId n,
                        double lambda_over_scale = 0.0);

CountingBackend resolve_backend(const GreedyConfig& cfg, NodeId n, EdgeId m);

// Edge greedy: repeatedly removes the edge maximising
// min{r, coverage(e)} / c(e), coverage(e) = 2k w_e At^(k-1)_e and
// r = trace(At^k) - n with At = A / T, until trace(At^k) < n.
RemovalPlan greedy_walk_edges(const Graph& g, const GreedyConfig& cfg);

// The lazy engine directly, whatever the configured backend.
RemovalPlan greedy_edge_choice_lazy(const Graph& g, const GreedyConfig& cfg);

// Node greedy with coverage(v) = k At^k_vv and node costs.
RemovalPlan greedy_walk_nodes(const Graph& g, const GreedyConfig& cfg);

// Edge greedy on B / delta with B_ij = beta_ij. cfg.threshold is ignored;
// the lambda-direct rule compares rho(B) with delta.
RemovalPlan greedy_walk_nonuniform(const Graph& g, const TransmissionMatrix& b,
                                   const GreedyConfig& cfg);

}  // namespace srm
