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

#include "srm/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "srm/errors.hpp"

namespace srm {
namespace {

// Splits a line into whitespace-separated fields after stripping comments
// and a trailing CR.
std::vector<std::string_view> fields_of(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == ',')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != ',') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_id(std::string_view s, int line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected a node id, got '" + std::string(s) + "'", line);
  }
  if (v < 0) {
    throw ParseError("node ids must be nonnegative, got " + std::string(s),
                     line);
  }
  return v;
}

double parse_real(std::string_view s, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("expected a number, got '" + std::string(s) + "'", line);
  }
  return v;
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::unordered_map<std::int64_t, NodeId> id_index(const Graph& g) {
  std::unordered_map<std::int64_t, NodeId> idx;
  idx.reserve(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) idx.emplace(g.original_id(v), v);
  return idx;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, CostMode mode) {
  struct Raw {
    std::int64_t a, b;
    double cost;
  };
  std::vector<Raw> raw;
  LoadReport report;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = fields_of(line);
    if (f.empty()) continue;
    if (f.size() < 2 || f.size() > 3) {
      throw ParseError("expected 'u v [cost]'", lineno);
    }
    Raw r{parse_id(f[0], lineno), parse_id(f[1], lineno), 1.0};
    if (f.size() == 3) {
      double c = parse_real(f[2], lineno);
      if (!std::isfinite(c) || c <= 0.0) {
        throw ValidationError("line " + std::to_string(lineno) +
                              ": edge cost must be positive, got " +
                              std::string(f[2]));
      }
      if (mode == CostMode::kFromColumn) r.cost = c;
    }
    raw.push_back(r);
  }
  report.lines = lineno;

  std::vector<std::int64_t> ids;
  ids.reserve(raw.size() * 2);
  for (const Raw& r : raw) {
    ids.push_back(r.a);
    ids.push_back(r.b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto compact = [&](std::int64_t id) {
    return static_cast<NodeId>(
        std::lower_bound(ids.begin(), ids.end(), id) - ids.begin());
  };

  std::map<Edge, double> best;
  for (const Raw& r : raw) {
    if (r.a == r.b) {
      ++report.self_loops;
      continue;
    }
    Edge e = make_edge(compact(r.a), compact(r.b));
    auto [it, inserted] = best.emplace(e, r.cost);
    if (!inserted) {
      ++report.duplicate_edges;
      it->second = std::min(it->second, r.cost);
    }
  }
  std::vector<CostedEdge> edges;
  edges.reserve(best.size());
  for (const auto& [e, c] : best) edges.push_back({e.u, e.v, c});
  const auto n = static_cast<NodeId>(ids.size());
  return {Graph::from_edges(n, edges, {}, std::move(ids)), report};
}

LoadedGraph load_edge_list_file(const std::filesystem::path& path,
                                CostMode mode) {
  auto in = open_or_throw(path);
  return load_edge_list(in, mode);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[64];
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edge(id);
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), g.edge_cost(id));
    out << g.original_id(e.u) << ' ' << g.original_id(e.v) << ' '
        << std::string_view(buf, ptr - buf) << '\n';
  }
}

Graph apply_node_costs(const Graph& g, std::istream& in) {
  auto idx = id_index(g);
  std::vector<double> costs(g.node_costs().begin(), g.node_costs().end());
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = fields_of(line);
    if (f.empty()) continue;
    if (f.size() != 2) throw ParseError("expected 'v cost'", lineno);
    const std::int64_t id = parse_id(f[0], lineno);
    const double c = parse_real(f[1], lineno);
    auto it = idx.find(id);
    if (it == idx.end()) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": unknown node " + std::to_string(id));
    }
    if (!std::isfinite(c) || c <= 0.0) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": node cost must be positive");
    }
    costs[it->second] = c;
  }
  std::vector<CostedEdge> edges;
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    edges.push_back({g.edge(id).u, g.edge(id).v, g.edge_cost(id)});
  }
  return Graph::from_edges(
      g.num_nodes(), edges, std::move(costs),
      std::vector<std::int64_t>(g.original_ids().begin(),
                                g.original_ids().end()));
}

Graph apply_node_costs_file(const Graph& g, const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return apply_node_costs(g, in);
}

TransmissionMatrix TransmissionMatrix::uniform(const Graph& g, double beta,
                                               double delta) {
  TransmissionMatrix tm;
  tm.rates.assign(g.num_edges(), beta);
  tm.recovery = delta;
  tm.validate(g);
  return tm;
}

void TransmissionMatrix::validate(const Graph& g) const {
  if (static_cast<EdgeId>(rates.size()) != g.num_edges()) {
    throw ValidationError("transmission rates do not align with the graph");
  }
  if (!std::isfinite(recovery) || recovery <= 0.0) {
    throw ValidationError("recovery rate must be positive");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!std::isfinite(rates[e]) || rates[e] <= 0.0) {
      throw ValidationError("rate on edge " + to_string(g.edge(e)) +
                            " must be positive");
    }
  }
}

TransmissionMatrix load_rates(std::istream& in, const Graph& g, double delta) {
  auto idx = id_index(g);
  TransmissionMatrix tm;
  tm.recovery = delta;
  tm.rates.assign(g.num_edges(), std::nan(""));
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto f = fields_of(line);
    if (f.empty()) continue;
    if (f.size() != 3) throw ParseError("expected 'u v beta'", lineno);
    const std::int64_t a = parse_id(f[0], lineno);
    const std::int64_t b = parse_id(f[1], lineno);
    const double beta = parse_real(f[2], lineno);
    auto ia = idx.find(a);
    auto ib = idx.find(b);
    std::optional<EdgeId> e;
    if (ia != idx.end() && ib != idx.end()) e = g.find_edge(ia->second, ib->second);
    if (!e) {
      throw ValidationError("line " + std::to_string(lineno) + ": rate for " +
                            std::to_string(a) + "-" + std::to_string(b) +
                            " is not on an edge of the graph");
    }
    if (!std::isnan(tm.rates[*e]) && tm.rates[*e] != beta) {
      throw ValidationError("line " + std::to_string(lineno) +
                            ": asymmetric rates for edge " + std::to_string(a) +
                            "-" + std::to_string(b));
    }
    tm.rates[*e] = beta;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (std::isnan(tm.rates[e])) {
      throw ValidationError("no rate given for edge " +
                            std::to_string(g.original_id(g.edge(e).u)) + "-" +
                            std::to_string(g.original_id(g.edge(e).v)));
    }
  }
  tm.validate(g);
  return tm;
}

TransmissionMatrix load_rates_file(const std::filesystem::path& path,
                                   const Graph& g, double delta) {
  auto in = open_or_throw(path);
  return load_rates(in, g, delta);
}

}  // namespace srm
