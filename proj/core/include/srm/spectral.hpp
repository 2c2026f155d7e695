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

#include <cstdint>
#include <span>
#include <vector>

#include "srm/adjacency.hpp"
#include "srm/graph.hpp"

namespace srm {

struct PowerOptions {
  // Stop once ||Ax - lambda x||_inf <= tolerance for unit-norm x.
  double tolerance = 1e-9;
  // 0 selects 10 n log n, at least 1000.
  std::int64_t max_iters = 0;
  // Seeds the random restart taken on stagnation.
  std::uint64_t seed = 0;
  // Optional nonnegative start vector. It is blended with the uniform
  // vector so that no component of the graph starts with zero mass.
  std::span<const double> start = {};
};

struct SpectralReport {
  double lambda1 = 0.0;
  std::vector<double> eigenvector;  // unit 2-norm, nonnegative
  std::int64_t iterations = 0;
  double residual = 0.0;
  bool converged = true;  // false: best estimate after max_iters
};

// Leading eigenpair of the adjacency matrix by shifted power iteration.
// An edgeless graph has lambda1 = 0.
SpectralReport power_iteration(const Graph& g, const PowerOptions& opts = {});
// Same on a scaled, possibly weighted operator.
SpectralReport power_iteration(const WeightedAdjacency& a,
                               const PowerOptions& opts = {});

// PageRank with uniform teleport. Dangling (isolated) nodes spread their
// mass uniformly. Entries sum to 1.
std::vector<double> pagerank(const Graph& g, double damping = 0.85,
                             double tolerance = 1e-12);

// Exact number of rooted closed k-walks, trace(A^k), by depth-first
// enumeration. Refuses n > 14 or k > 10 with SizeGuardError.
std::uint64_t enumerate_closed_walks(const Graph& g, int k);

}  // namespace srm
