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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "srm/adversarial.hpp"
#include "srm/errors.hpp"
#include "srm/greedy_walk.hpp"
#include "srm/heuristics.hpp"
#include "srm/io.hpp"
#include "srm/primal_dual.hpp"
#include "srm/random.hpp"
#include "srm/sis.hpp"
#include "srm/sparsifier.hpp"
#include "srm/spectral.hpp"
#include "srm/suites.hpp"

namespace srm::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kAlgorithms = {
    "greedywalk",   "greedywalk-sparse", "primaldual",
    "hitwalks-first", "productdegree",   "eigenscore",
    "linepagerank", "hybrid",            "greedywalk-nodes",
    "degree-nodes", "eigenscore-nodes",  "greedywalk-nonuniform"};

const std::vector<std::string> kDefaultCompare = {
    "greedywalk", "productdegree", "eigenscore", "linepagerank", "hybrid"};

constexpr EdgeId kLargeNetwork = 1000000;

bool is_node_algorithm(const std::string& a) {
  return a == "greedywalk-nodes" || a == "degree-nodes" ||
         a == "eigenscore-nodes";
}

struct Flags {
  std::string algorithm;
  std::string graph;
  std::string t_text;
  double epsilon = 0.05;
  int k = 0;
  std::string budget_text;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  std::string cost_file;
  std::string rates_file;
  std::string stop = "threshold";
  double delta = 1.0;
  // compare
  std::vector<std::string> algorithms = kDefaultCompare;
  double grid = 0.0;
  // validate
  std::string suite;
  int t_prime = 4;
  int graphs = 50;
  std::string replay_csv;
  // make-adversarial
  int q = 0;
  // sis
  double beta = 0.0;
  double horizon = 100.0;
  int runs = 100;
  std::string initial = "all";
};

double parse_double(std::string_view s, const std::string& flag) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(x)) {
    throw ValidationError(flag + ": cannot parse '" + std::string(s) + "'");
  }
  return x;
}

double lambda_of(const Graph& g) {
  return power_iteration(g).lambda1;
}

// "1.5" is absolute; "0.5l" is a fraction of lambda1(G).
double resolve_threshold(const std::string& text, const Graph& g) {
  if (text.empty()) throw ValidationError("--T is required");
  double t = 0.0;
  if (text.back() == 'l') {
    t = parse_double(std::string_view(text).substr(0, text.size() - 1), "--T") *
        lambda_of(g);
  } else {
    t = parse_double(text, "--T");
  }
  if (!(t > 0.0)) throw ValidationError("--T must be positive");
  return t;
}

// "12" is absolute; "0.1m" is that fraction of the edge count, "0.1n" of
// the node count.
double resolve_budget(const std::string& text, const Graph& g) {
  if (text.empty()) return std::numeric_limits<double>::infinity();
  const char unit = text.back();
  double b = 0.0;
  if (unit == 'm' || unit == 'n') {
    const double f =
        parse_double(std::string_view(text).substr(0, text.size() - 1), "--budget");
    b = f * (unit == 'm' ? g.num_edges() : g.num_present_nodes());
  } else {
    b = parse_double(text, "--budget");
  }
  if (b < 0.0) throw ValidationError("--budget must be nonnegative");
  return b;
}

struct Resolved {
  double threshold = 0.0;
  double epsilon = 0.05;
  int k = 0;
  double budget = std::numeric_limits<double>::infinity();
  bool budget_stop = false;
};

Resolved resolve(const Flags& f, const Graph& g, bool needs_threshold) {
  Resolved r;
  r.epsilon = f.epsilon;
  r.k = f.k;
  r.budget = resolve_budget(f.budget_text, g);
  r.budget_stop = f.stop == "budget";
  if (r.budget_stop && !std::isfinite(r.budget)) {
    throw ValidationError("--stop budget needs --budget");
  }
  if (needs_threshold && (!r.budget_stop || !f.t_text.empty())) {
    r.threshold = resolve_threshold(f.t_text, g);
  }
  return r;
}

GreedyConfig greedy_config(const Resolved& r) {
  GreedyConfig cfg;
  cfg.threshold = r.threshold > 0.0 ? r.threshold : 1.0;
  cfg.epsilon = r.epsilon;
  cfg.walk_length = r.k;
  cfg.budget = r.budget;
  cfg.stop_rule = r.budget_stop ? StopRule::kBudgetOnly : StopRule::kRootedTrace;
  return cfg;
}

StopCriterion stop_criterion(const Resolved& r) {
  StopCriterion s;
  s.threshold = r.budget_stop ? 0.0 : r.threshold;
  s.budget = r.budget;
  return s;
}

RemovalPlan run_algorithm(const std::string& a, const Graph& g,
                          const Resolved& r, const TransmissionMatrix* rates,
                          std::ostream& err) {
  if ((a == "eigenscore" || a == "hybrid" || a == "eigenscore-nodes") &&
      g.num_edges() > kLargeNetwork) {
    err << "warning: " << a << " recomputes eigenvectors every step; m = "
        << g.num_edges() << " will be slow\n";
  }
  const GreedyConfig cfg = greedy_config(r);
  const StopCriterion stop = stop_criterion(r);
  RemovalPlan plan;
  if (a == "greedywalk") {
    plan = greedy_walk_edges(g, cfg);
  } else if (a == "greedywalk-sparse") {
    plan = greedy_walk_sparse(g, cfg);
  } else if (a == "primaldual") {
    plan = hit_walks(g, cfg, {HitWalksMode::kFull});
  } else if (a == "hitwalks-first") {
    plan = hit_walks(g, cfg, {HitWalksMode::kFirstIteration});
  } else if (a == "productdegree") {
    plan = product_degree_plan(g, stop);
  } else if (a == "eigenscore") {
    plan = eigen_score_plan(g, stop);
  } else if (a == "linepagerank") {
    plan = line_pagerank_plan(g, stop);
  } else if (a == "hybrid") {
    plan = hybrid_plan(g, stop);
  } else if (a == "greedywalk-nodes") {
    plan = greedy_walk_nodes(g, cfg);
  } else if (a == "degree-nodes") {
    plan = node_heuristic_plan(g, NodeScorer::kDegree, stop);
  } else if (a == "eigenscore-nodes") {
    plan = node_heuristic_plan(g, NodeScorer::kEigenScore, stop);
  } else if (a == "greedywalk-nonuniform") {
    if (rates == nullptr) {
      throw ValidationError("greedywalk-nonuniform needs --rates-file");
    }
    plan = greedy_walk_nonuniform(g, *rates, cfg);
  } else {
    throw ValidationError("unknown algorithm '" + a + "'");
  }
  if (!plan.has_trajectory()) {
    TrajectoryOptions opts;
    if (rates != nullptr && a == "greedywalk-nonuniform") opts.weights = rates->rates;
    record_trajectory(g, plan, opts);
  }
  return plan;
}

void write_text(const std::string& path, const std::string& text,
                std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  if (!f) throw IoError("write failed for " + path);
}

LoadedGraph load(const Flags& f, std::ostream& err) {
  LoadedGraph lg = load_edge_list_file(f.graph);
  if (lg.report.duplicate_edges > 0 || lg.report.self_loops > 0) {
    err << "note: " << f.graph << ": collapsed " << lg.report.duplicate_edges
        << " duplicate edges, dropped " << lg.report.self_loops
        << " self-loops\n";
  }
  if (!f.cost_file.empty()) {
    lg.graph = apply_node_costs_file(lg.graph, f.cost_file);
  }
  return lg;
}

Json config_json(const Flags& f, const Resolved& r, int walk_length) {
  Json c;
  c["T"] = r.threshold;
  c["epsilon"] = r.epsilon;
  c["k"] = walk_length;
  c["budget"] = std::isfinite(r.budget) ? Json(r.budget) : Json("inf");
  c["stop"] = f.stop;
  c["seed"] = f.seed;
  c["cost_file"] = f.cost_file;
  c["rates_file"] = f.rates_file;
  c["delta"] = f.delta;
  return c;
}

int cmd_run(const Flags& f, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(f, err);
  const Graph& g = lg.graph;
  const bool nonuniform = f.algorithm == "greedywalk-nonuniform";
  const Resolved r = resolve(f, g, !nonuniform);
  TransmissionMatrix rates;
  if (!f.rates_file.empty()) rates = load_rates_file(f.rates_file, g, f.delta);

  const auto start = std::chrono::steady_clock::now();
  const RemovalPlan plan = run_algorithm(
      f.algorithm, g, r, f.rates_file.empty() ? nullptr : &rates, err);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();

  write_text(f.out, plan_csv(g, plan), out);
  if (!f.out.empty()) {
    Json m;
    m["command"] = "run";
    m["algorithm"] = f.algorithm;
    m["graph"] = f.graph;
    m["nodes"] = g.num_nodes();
    m["edges"] = g.num_edges();
    m["config"] = config_json(f, r, plan.walk_length);
    m["steps"] = plan.size();
    m["total_cost"] = plan.total_cost();
    m["exhausted"] = plan.exhausted;
    m["initial_lambda1"] = plan.lambda_trajectory.front();
    m["final_lambda1"] = plan.lambda_trajectory.back();
    m["wall_time_seconds"] = wall;
    write_text(f.out + ".manifest.json", m.dump(2) + "\n", out);
  }
  return kOk;
}

int cmd_compare(const Flags& f, std::ostream& out, std::ostream& err) {
  const LoadedGraph lg = load(f, err);
  const Graph& g = lg.graph;
  if (f.algorithms.empty()) throw ValidationError("--algorithms is empty");
  const bool nodes = is_node_algorithm(f.algorithms.front());
  for (const auto& a : f.algorithms) {
    if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
      throw ValidationError("unknown algorithm '" + a + "'");
    }
    if (is_node_algorithm(a) != nodes) {
      throw ValidationError("cannot compare node and edge algorithms together");
    }
  }
  const bool nonuniform =
      std::find(f.algorithms.begin(), f.algorithms.end(),
                "greedywalk-nonuniform") != f.algorithms.end();
  TransmissionMatrix rates;
  if (!f.rates_file.empty()) rates = load_rates_file(f.rates_file, g, f.delta);
  const Resolved r = resolve(f, g, !(nonuniform && f.algorithms.size() == 1));

  // Sequential in the fixed algorithm order, so the output is deterministic.
  std::vector<RemovalPlan> plans;
  Json timings = Json::object();
  for (const auto& a : f.algorithms) {
    const auto start = std::chrono::steady_clock::now();
    plans.push_back(run_algorithm(a, g, r, f.rates_file.empty() ? nullptr : &rates, err));
    timings[a] = std::chrono::duration<double>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  }

  const double denom = nodes ? g.num_present_nodes() : g.num_edges();
  std::size_t longest = 0;
  for (const auto& p : plans) longest = std::max(longest, p.size());
  // Per-step grid by default; otherwise every multiple of --grid.
  std::vector<std::size_t> steps;
  if (f.grid > 0.0) {
    for (int i = 0;; ++i) {
      const double frac = i * f.grid;
      const auto s = static_cast<std::size_t>(std::floor(frac * denom + 1e-9));
      steps.push_back(std::min(s, longest));
      if (s >= longest) break;
    }
  } else {
    for (std::size_t s = 0; s <= longest; ++s) steps.push_back(s);
  }

  std::ostringstream csv;
  csv << "fraction_removed";
  for (const auto& a : f.algorithms) csv << ',' << a;
  csv << '\n';
  for (std::size_t row = 0; row < steps.size(); ++row) {
    const double frac = f.grid > 0.0 ? row * f.grid : steps[row] / denom;
    csv << format_number(frac);
    for (const auto& p : plans) {
      const std::size_t s = std::min(steps[row], p.size());
      csv << ',' << format_number(p.lambda_trajectory[s]);
    }
    csv << '\n';
  }
  write_text(f.out, csv.str(), out);
  if (!f.out.empty()) {
    Json m;
    m["command"] = "compare";
    m["algorithms"] = f.algorithms;
    m["graph"] = f.graph;
    m["nodes"] = g.num_nodes();
    m["edges"] = g.num_edges();
    m["config"] = config_json(f, r, 0);
    m["grid"] = f.grid;
    Json finals = Json::object();
    for (std::size_t i = 0; i < plans.size(); ++i) {
      finals[f.algorithms[i]] = plans[i].lambda_trajectory.back();
    }
    m["final_lambda1"] = finals;
    m["wall_time_seconds"] = timings;
    write_text(f.out + ".manifest.json", m.dump(2) + "\n", out);
  }
  return kOk;
}

// Splits a CSV line; items never contain commas.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

NodeId index_of(const Graph& g, const std::string& text) {
  const auto id = static_cast<std::int64_t>(parse_double(text, "item"));
  const auto ids = g.original_ids();
  const auto it = std::lower_bound(ids.begin(), ids.end(), id);
  if (it == ids.end() || *it != id) {
    throw ValidationError("node " + text + " is not in the graph");
  }
  return static_cast<NodeId>(it - ids.begin());
}

// Recomputes lambda1 at up to 11 evenly spaced rows of a plan CSV.
SuiteReport replay(const Flags& f, std::ostream& err) {
  if (f.graph.empty()) throw ValidationError("replay needs --graph");
  const Graph g = load(f, err).graph;
  std::ifstream in(f.replay_csv);
  if (!in) throw IoError("cannot open " + f.replay_csv);
  std::string line;
  std::getline(in, line);
  std::vector<std::string> items;
  std::vector<double> lambdas;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 6) throw ParseError("expected 6 columns", 0);
    items.push_back(cells[1]);
    lambdas.push_back(parse_double(cells[5], "lambda1"));
  }
  if (lambdas.empty()) throw ValidationError(f.replay_csv + " has no rows");
  const bool nodes = items.size() > 1 && items[1].find('-') == std::string::npos;

  SuiteReport rep{"replay", {}};
  const std::size_t rows = lambdas.size();
  const std::size_t samples = std::min<std::size_t>(rows, 11);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t row = samples == 1 ? 0 : i * (rows - 1) / (samples - 1);
    std::vector<Edge> edges;
    std::vector<NodeId> vs;
    for (std::size_t s = 1; s <= row; ++s) {
      if (nodes) {
        vs.push_back(index_of(g, items[s]));
      } else {
        const auto dash = items[s].find('-');
        edges.push_back(make_edge(index_of(g, items[s].substr(0, dash)),
                                  index_of(g, items[s].substr(dash + 1))));
      }
    }
    const Graph res = nodes ? remove_nodes(g, vs) : remove_edges(g, edges);
    const double lam = lambda_of(res);
    const bool ok = std::abs(lam - lambdas[row]) <= 1e-6 * std::max(1.0, lam);
    rep.checks.push_back({"row " + std::to_string(row), ok,
                          "csv " + format_number(lambdas[row]) + ", recomputed " +
                              format_number(lam)});
  }
  return rep;
}

int cmd_validate(const Flags& f, std::ostream& out, std::ostream& err) {
  SuiteReport rep;
  if (f.suite == "replay") {
    rep = replay(f, err);
  } else {
    SuiteOptions opts;
    opts.seed = f.seed;
    opts.t_prime = f.t_prime;
    opts.graphs = f.graphs;
    rep = run_suite(f.suite, opts);
  }
  out << "suite " << rep.suite << '\n';
  for (const auto& c : rep.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  if (!rep.passed()) out << "counterexample: " << rep.first_counterexample() << '\n';
  if (!f.out.empty()) {
    Json j;
    j["suite"] = rep.suite;
    j["passed"] = rep.passed();
    Json checks = Json::array();
    for (const auto& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["checks"] = checks;
    j["counterexample"] = rep.first_counterexample();
    write_text(f.out, j.dump(2) + "\n", out);
  }
  return rep.passed() ? kOk : kPropertyFailure;
}

int cmd_make_adversarial(const Flags& f, std::ostream& out) {
  const int q = f.q > 0 ? f.q : 3 * f.t_prime;
  const AdversarialInstance inst = make_adversarial(f.t_prime, q);
  std::ostringstream graph;
  write_edge_list(graph, inst.graph);
  write_text(f.out, graph.str(), out);
  if (!f.out.empty()) {
    std::ostringstream w;
    for (const Edge& e : inst.witness_edges) w << e.u << ' ' << e.v << '\n';
    write_text(f.out + ".witness", w.str(), out);
    out << "T'=" << inst.t_prime << " q=" << inst.q
        << " nodes=" << inst.graph.num_nodes()
        << " edges=" << inst.graph.num_edges()
        << " witness=" << inst.witness_edges.size() << '\n';
  }
  return kOk;
}

int cmd_sis(const Flags& f, std::ostream& out, std::ostream& err) {
  const Graph g = load(f, err).graph;
  std::vector<NodeId> initial;
  if (f.initial == "all") {
    for (NodeId v = 0; v < g.num_nodes(); ++v) initial.push_back(v);
  } else {
    const auto count = static_cast<NodeId>(parse_double(f.initial, "--initial"));
    if (count < 1 || count > g.num_nodes()) {
      throw ValidationError("--initial must be 'all' or a count in 1..n");
    }
    std::vector<NodeId> perm(g.num_nodes());
    std::iota(perm.begin(), perm.end(), 0);
    SplitMix64 rng(f.seed);
    for (NodeId i = 0; i < count; ++i) {
      std::swap(perm[i], perm[i + rng.below(g.num_nodes() - i)]);
    }
    initial.assign(perm.begin(), perm.begin() + count);
    std::sort(initial.begin(), initial.end());
  }
  SisOutcome res;
  if (!f.rates_file.empty()) {
    const TransmissionMatrix b = load_rates_file(f.rates_file, g, f.delta);
    res = sis_simulate_nonuniform(g, b, initial, f.horizon, f.runs, f.seed);
  } else {
    res = sis_simulate(g, f.beta, f.delta, initial, f.horizon, f.runs, f.seed);
  }
  std::ostringstream csv;
  csv << "runs,censored,mean_extinction,median_extinction,horizon\n"
      << res.runs << ',' << res.censored << ','
      << format_number(res.mean_extinction()) << ','
      << format_number(res.median_with_censoring()) << ','
      << format_number(res.horizon) << '\n';
  write_text(f.out, csv.str(), out);
  return kOk;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--T", f.t_text, "Threshold: absolute, or a fraction of lambda1 with suffix l (0.5l)");
  sub->add_option("--epsilon", f.epsilon, "Approximation slack for the walk length")
      ->check(CLI::PositiveNumber);
  sub->add_option("--k", f.k, "Walk length (even); 0 selects it from epsilon")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--budget", f.budget_text,
                  "Cost limit: absolute, or a fraction of m or n (0.1m, 0.05n)");
  sub->add_option("--seed", f.seed, "Seed recorded in the manifest");
  sub->add_option("--out", f.out, "Output path; a .manifest.json sidecar is written next to it");
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv"}));
  sub->add_option("--cost-file", f.cost_file, "Node costs, one 'v cost' line per node");
  sub->add_option("--rates-file", f.rates_file, "Transmission rates, 'u v beta' per edge");
  sub->add_option("--delta", f.delta, "Recovery rate for --rates-file")
      ->check(CLI::PositiveNumber);
  sub->add_option("--stop", f.stop, "Stop rule")
      ->check(CLI::IsMember({"threshold", "budget"}));
}

}  // namespace

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string plan_csv(const Graph& g, const RemovalPlan& plan) {
  if (!plan.has_trajectory()) throw ValidationError("plan has no trajectory");
  const bool nodes = plan.kind == PlanKind::kNode;
  const double denom = nodes ? g.num_present_nodes() : g.num_edges();
  std::ostringstream os;
  os << "step,item,cost,cumulative_cost,fraction_removed,lambda1\n";
  os << "0,,0,0,0," << format_number(plan.lambda_trajectory[0]) << '\n';
  for (std::size_t i = 0; i < plan.size(); ++i) {
    os << i + 1 << ',';
    if (nodes) {
      os << g.original_id(plan.nodes[i]);
    } else {
      os << g.original_id(plan.edges[i].u) << '-' << g.original_id(plan.edges[i].v);
    }
    os << ',' << format_number(plan.step_cost[i]) << ','
       << format_number(plan.cumulative_cost[i]) << ','
       << format_number(denom > 0 ? (i + 1) / denom : 0.0) << ','
       << format_number(plan.lambda_trajectory[i + 1]) << '\n';
  }
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Spectral radius minimisation by edge and node removal", "srm"};
  app.set_config("--config", "", "TOML or INI file with option values; flags take precedence");
  app.require_subcommand(1);
  Flags f;

  auto* run_cmd = app.add_subcommand("run", "Run one algorithm and write its removal plan as CSV");
  run_cmd->add_option("algorithm", f.algorithm, "Algorithm")
      ->required()
      ->check(CLI::IsMember(kAlgorithms));
  run_cmd->add_option("graph", f.graph, "Edge-list file")->required();
  add_common(run_cmd, f);

  auto* cmp_cmd = app.add_subcommand("compare", "Run several algorithms on a shared fraction-removed grid");
  cmp_cmd->add_option("graph", f.graph, "Edge-list file")->required();
  cmp_cmd->add_option("--algorithms", f.algorithms, "Comma-separated algorithm list")
      ->delimiter(',');
  cmp_cmd->add_option("--grid", f.grid, "Grid step in fraction removed; 0 samples every step")
      ->check(CLI::NonNegativeNumber);
  add_common(cmp_cmd, f);

  auto* val_cmd = app.add_subcommand("validate", "Run a property suite (or replay a plan CSV)");
  val_cmd->add_option("suite", f.suite, "oracles, spectral-bounds, adversarial, sis-threshold, pruning-bounds or replay")
      ->required();
  val_cmd->add_option("--Tprime", f.t_prime, "T' for the adversarial suite")
      ->check(CLI::Range(2, 1000));
  val_cmd->add_option("--seed", f.seed, "Seed for generated graphs");
  val_cmd->add_option("--graphs", f.graphs, "Graph count for the oracles suite")
      ->check(CLI::PositiveNumber);
  val_cmd->add_option("--out", f.out, "Write a JSON report here");
  val_cmd->add_option("--graph", f.graph, "replay: edge-list file");
  val_cmd->add_option("--csv", f.replay_csv, "replay: plan CSV from 'srm run'");
  val_cmd->add_option("--cost-file", f.cost_file, "replay: node costs");

  auto* adv_cmd = app.add_subcommand("make-adversarial", "Write the clique, caterpillar and star instance");
  adv_cmd->add_option("--Tprime", f.t_prime, "T'")->required()->check(CLI::Range(2, 1000));
  adv_cmd->add_option("--q", f.q, "Spine length; default 3 T'")->check(CLI::Range(3, 1000000));
  adv_cmd->add_option("--out", f.out, "Edge-list path; the witness goes to <out>.witness");

  auto* sis_cmd = app.add_subcommand("sis", "Monte-Carlo SIS extinction times");
  sis_cmd->add_option("graph", f.graph, "Edge-list file")->required();
  sis_cmd->add_option("--beta", f.beta, "Infection rate")->check(CLI::NonNegativeNumber);
  sis_cmd->add_option("--delta", f.delta, "Recovery rate")->check(CLI::PositiveNumber);
  sis_cmd->add_option("--rates-file", f.rates_file, "Per-edge rates 'u v beta' (overrides --beta)");
  sis_cmd->add_option("--horizon", f.horizon, "Simulation horizon")->check(CLI::PositiveNumber);
  sis_cmd->add_option("--runs", f.runs, "Independent runs")->check(CLI::PositiveNumber);
  sis_cmd->add_option("--seed", f.seed, "Seed");
  sis_cmd->add_option("--initial", f.initial, "'all' or a number of random initially infected nodes");
  sis_cmd->add_option("--out", f.out, "Output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  }

  try {
    if (run_cmd->parsed()) return cmd_run(f, out, err);
    if (cmp_cmd->parsed()) return cmd_compare(f, out, err);
    if (val_cmd->parsed()) return cmd_validate(f, out, err);
    if (adv_cmd->parsed()) return cmd_make_adversarial(f, out);
    if (sis_cmd->parsed()) return cmd_sis(f, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << "error: " << f.graph << ": " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kUsageError;
}

}  // namespace srm::cli
