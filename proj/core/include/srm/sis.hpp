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

#include "srm/graph.hpp"
#include "srm/io.hpp"

namespace srm {

struct SisOutcome {
  int runs = 0;
  std::vector<double> extinction_times;  // sorted ascending
  int censored = 0;                      // runs still infected at horizon
  double horizon = 0.0;

  // Mean over all runs with censored runs counted at the horizon.
  double mean_extinction() const;
  // Median over all runs with censored runs counted at the horizon.
  double median_with_censoring() const;
};

// Continuous-time SIS: every infected node recovers at rate delta and
// infects each susceptible neighbour at rate beta. Exact event simulation by
// uniformisation with per-node rejection. Run r draws from
// SplitMix64::stream(seed, r), so results depend only on the arguments.
SisOutcome sis_simulate(const Graph& g, double beta, double delta,
                        std::span<const NodeId> initial_infected,
                        double horizon, int runs, std::uint64_t seed);

// Per-edge rates b.rates and recovery b.recovery. With all rates equal this
// reproduces sis_simulate draw for draw.
SisOutcome sis_simulate_nonuniform(const Graph& g, const TransmissionMatrix& b,
                                   std::span<const NodeId> initial_infected,
                                   double horizon, int runs,
                                   std::uint64_t seed);

}  // namespace srm
