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
#include "srm/plan.hpp"

namespace srm {

// A run stops before the first removal once lambda1 < threshold, or before
// an item whose cost would push the total above budget, or when no item is
// left (plan.exhausted).
struct StopCriterion {
  double threshold = 0.0;  // 0 disables the spectral stop
  double budget = std::numeric_limits<double>::infinity();
};

struct HeuristicOptions {
  // Recompute scores on the residual graph after every removal.
  bool dynamic = true;
  double tolerance = 1e-9;  // power iteration
};

// Score deg(u) deg(v). Dynamic by default.
RemovalPlan product_degree_plan(const Graph& g, const StopCriterion& stop,
                                const HeuristicOptions& opts = {});

// Score x(u) x(v) for the leading eigenvector x. Dynamic by default.
RemovalPlan eigen_score_plan(const Graph& g, const StopCriterion& stop,
                             const HeuristicOptions& opts = {});

// Score = PageRank of the edge's node in the line graph. Static by default;
// pass dynamic = true to recompute on the shrinking line graph.
RemovalPlan line_pagerank_plan(const Graph& g, const StopCriterion& stop,
                               const HeuristicOptions& opts = {false, 1e-9});

// Walks the static EigenScore order pi and ProductDegree order mu; each step
// removes whichever of the two current candidates leaves the smaller
// lambda1 (ties go to pi) and advances only that index.
RemovalPlan hybrid_plan(const Graph& g, const StopCriterion& stop,
                        double tolerance = 1e-9);

enum class NodeScorer { kDegree, kEigenScore };

// Removes the highest-scoring node each step, scores recomputed on the
// residual graph, ties to the smaller id.
RemovalPlan node_heuristic_plan(const Graph& g, NodeScorer scorer,
                                const StopCriterion& stop,
                                double tolerance = 1e-9);

}  // namespace srm
