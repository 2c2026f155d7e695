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

#include <span>
#include <vector>

#include "srm/errors.hpp"
#include "srm/graph.hpp"
#include "srm/greedy_walk.hpp"
#include "srm/plan.hpp"

namespace srm {

// Dual accumulators z and covered walk mass, both in units of At = A / scale.
struct CoverState {
  std::vector<EdgeId> picked;
  std::vector<double> z;  // by EdgeId
  double covered = 0.0;
  double target_sigma = 0.0;
};

// Thrown when every eligible edge is gone before covered reaches sigma.
class CoverUnreachable : public Error {
 public:
  CoverUnreachable(const std::string& what, CoverState partial)
      : Error(what), partial_(std::move(partial)) {}
  const CoverState& partial() const { return partial_; }

 private:
  CoverState partial_;
};

struct CoverOptions {
  int k = 2;
  double scale = 1.0;
  // Edges removed before the first round; their walk mass counts as covered.
  std::span<const EdgeId> forced = {};
  // When nonnegative, the run also stops once the residual trace is at most
  // this value. Use it when sigma is close to the full trace, where the
  // running covered sum cannot resolve the last few units.
  double residual_target = -1.0;
};

// Primal-dual cover of closed k-walks. Each round computes coverage
// 2k w At^(k-1)_e on the residual graph, sets x = min (c_e - z_e) /
// coverage_e over eligible edges, raises every eligible z_e by
// x coverage_e and removes the minimising edge. covered grows by the exact
// trace drop of each removal. Edges with infinite cost are ineligible.
CoverState primal_dual_cover(const Graph& g, std::span<const double> costs,
                             double sigma, const CoverOptions& opts);

enum class HitWalksMode {
  kFirstIteration,  // one primal-dual run over all edges
  kFull,            // also every cost-sorted forced prefix candidate
};

struct HitWalksOptions {
  HitWalksMode mode = HitWalksMode::kFirstIteration;
  // Full mode refuses larger graphs unless the guard is lifted.
  EdgeId full_mode_max_edges = 2000;
};

// Plan whose removal brings trace(At^k) to at most n, sigma = trace - n.
// The stop rule is ignored; the plan is truncated at cfg.budget.
RemovalPlan hit_walks(const Graph& g, const GreedyConfig& cfg,
                      const HitWalksOptions& opts = {});

}  // namespace srm
