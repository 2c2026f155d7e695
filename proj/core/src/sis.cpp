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

#include "srm/sis.hpp"

#include <algorithm>
#include <cmath>

#include "srm/errors.hpp"
#include "srm/random.hpp"

namespace srm {

double SisOutcome::mean_extinction() const {
  if (runs == 0) return 0.0;
  double s = censored * horizon;
  for (double t : extinction_times) s += t;
  return s / runs;
}

double SisOutcome::median_with_censoring() const {
  if (runs == 0) return 0.0;
  std::vector<double> all = extinction_times;
  all.resize(runs, horizon);
  std::sort(all.begin(), all.end());
  const std::size_t mid = all.size() / 2;
  return all.size() % 2 ? all[mid] : 0.5 * (all[mid - 1] + all[mid]);
}

namespace {

SisOutcome simulate(const Graph& g, std::span<const double> rates,
                    double delta, std::span<const NodeId> initial,
                    double horizon, int runs, std::uint64_t seed) {
  if (!(delta > 0.0)) throw ValidationError("recovery rate must be positive");
  if (!(horizon > 0.0)) throw ValidationError("horizon must be positive");
  if (runs < 0) throw ValidationError("run count must be nonnegative");
  if (initial.empty()) throw ValidationError("need at least one infected node");
  const NodeId n = g.num_nodes();
  for (NodeId v : initial) {
    if (v < 0 || v >= n) throw ValidationError("infected node out of range");
  }

  // Cumulative outgoing rates per neighbour slot.
  std::vector<std::size_t> off(n + 1, 0);
  for (NodeId v = 0; v < n; ++v) off[v + 1] = off[v] + g.degree(v);
  std::vector<double> cum(off[n]);
  std::vector<double> out(n, 0.0);
  for (NodeId v = 0; v < n; ++v) {
    double acc = 0.0;
    auto inc = g.incident_edges(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      acc += rates[inc[i]];
      cum[off[v] + i] = acc;
    }
    out[v] = acc;
  }
  const double bmax = n > 0 ? *std::max_element(out.begin(), out.end()) : 0.0;
  const double per_node = delta + bmax;

  SisOutcome res;
  res.runs = runs;
  res.horizon = horizon;
  std::vector<NodeId> infected;
  std::vector<std::int64_t> where(n, -1);
  for (int r = 0; r < runs; ++r) {
    SplitMix64 rng = SplitMix64::stream(seed, static_cast<std::uint64_t>(r));
    infected.clear();
    std::fill(where.begin(), where.end(), -1);
    for (NodeId v : initial) {
      if (where[v] >= 0) continue;
      where[v] = static_cast<std::int64_t>(infected.size());
      infected.push_back(v);
    }
    double t = 0.0;
    bool extinct = false;
    for (;;) {
      const double total = per_node * infected.size();
      t += rng.exponential(total);
      if (t > horizon) break;
      const NodeId v = infected[rng.below(infected.size())];
      const double u = rng.uniform() * per_node;
      if (u < delta) {
        const std::int64_t pos = where[v];
        infected[pos] = infected.back();
        where[infected[pos]] = pos;
        infected.pop_back();
        where[v] = -1;
        if (infected.empty()) {
          extinct = true;
          break;
        }
        continue;
      }
      const double x = u - delta;
      if (x >= out[v]) continue;  // thinning: no event
      auto first = cum.begin() + off[v];
      auto last = cum.begin() + off[v + 1];
      const auto slot = std::upper_bound(first, last, x) - first;
      const NodeId w = g.neighbors(v)[std::min<std::size_t>(slot, g.degree(v) - 1)];
      if (where[w] >= 0) continue;  // neighbour already infected
      where[w] = static_cast<std::int64_t>(infected.size());
      infected.push_back(w);
    }
    if (extinct) {
      res.extinction_times.push_back(t);
    } else {
      ++res.censored;
    }
  }
  std::sort(res.extinction_times.begin(), res.extinction_times.end());
  return res;
}

}  // namespace

SisOutcome sis_simulate(const Graph& g, double beta, double delta,
                        std::span<const NodeId> initial_infected,
                        double horizon, int runs, std::uint64_t seed) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) {
    throw ValidationError("infection rate must be nonnegative");
  }
  std::vector<double> rates(g.num_edges(), beta);
  return simulate(g, rates, delta, initial_infected, horizon, runs, seed);
}

SisOutcome sis_simulate_nonuniform(const Graph& g, const TransmissionMatrix& b,
                                   std::span<const NodeId> initial_infected,
                                   double horizon, int runs,
                                   std::uint64_t seed) {
  b.validate(g);
  return simulate(g, b.rates, b.recovery, initial_infected, horizon, runs,
                  seed);
}

}  // namespace srm
