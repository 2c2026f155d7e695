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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "srm/graph.hpp"

namespace srm {

enum class CostMode {
  kUnit,        // ignore any third column
  kFromColumn,  // third column is the edge cost; missing means 1
};

struct LoadReport {
  int duplicate_edges = 0;  // collapsed, minimum cost kept
  int self_loops = 0;       // dropped
  int lines = 0;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

// Reads whitespace-separated "u v [cost]" lines. '#' starts a comment,
// CRLF is accepted. Node ids are nonnegative integers and are compacted to
// 0..n-1 in ascending original-id order; the map is kept on the Graph.
// Throws ParseError (with line number) or ValidationError (bad cost).
LoadedGraph load_edge_list(std::istream& in, CostMode mode = CostMode::kFromColumn);
LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                CostMode mode = CostMode::kFromColumn);

// Deterministic edge-list text: one "u v cost" line per edge in (min, max)
// order, using original ids and round-trip precision for costs.
void write_edge_list(std::ostream& out, const Graph& g);

// Applies "v cost" lines (original ids) to the node costs of g. Unknown
// ids are a ValidationError.
Graph apply_node_costs(const Graph& g, std::istream& in);
Graph apply_node_costs_file(const Graph& g, const std::filesystem::path& path);

// Per-edge transmission rates beta_ij plus a shared recovery rate delta.
// rates is indexed by EdgeId of the graph it was built for.
struct TransmissionMatrix {
  std::vector<double> rates;
  double recovery = 1.0;

  static TransmissionMatrix uniform(const Graph& g, double beta, double delta);
  // Throws ValidationError unless rates align with g and everything is
  // positive and finite.
  void validate(const Graph& g) const;
};

// Reads "u v beta" lines (original ids). Every edge of g must receive a
// rate; a pair given twice with different rates is asymmetric and rejected.
TransmissionMatrix load_rates(std::istream& in, const Graph& g, double delta);
TransmissionMatrix load_rates_file(const std::filesystem::path& path,
                                   const Graph& g, double delta);

}  // namespace srm
