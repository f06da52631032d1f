// Copyright 2026 The TwinOpt Authors.
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
#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>

#include "cli_common.h"
#include "commands.h"
#include "svg_chart.h"
#include "twinopt/io.h"
#include "twinopt/rng.h"
#include "twinopt/solvers.h"

namespace twinopt::cli {

namespace {

constexpr const char* kCsvHeader =
    "algo,axis,rep,utility,value_queries,independence_checks,wall_time_s,"
    "solution_size\n";

void check_algorithm(const std::string& algo) {
  const auto& names = solver_names();
  if (std::find(names.begin(), names.end(), algo) == names.end()) {
    throw UsageError("unknown algorithm '" + algo + "'");
  }
}

// Per-repetition solver seed; repetition 0 is what `run` uses.
std::uint64_t rep_seed(std::uint64_t master, int rep) {
  return derive_seed(master, static_cast<std::uint64_t>(rep));
}

std::string csv_row(const RunReport& r, const std::string& axis, int rep,
                    bool timing) {
  return r.algorithm + "," + axis + "," + std::to_string(rep) + "," +
         format_double(r.f_star) + "," + std::to_string(r.value_queries) +
         "," + std::to_string(r.independence_checks) + "," +
         format_double(timing ? r.wall_time_s : 0.0) + "," +
         std::to_string(r.s_star.size()) + "\n";
}

nlohmann::json result_json(const RunReport& r, bool timing) {
  nlohmann::json log = nlohmann::json::array();
  for (const Insertion& in : r.log.entries()) {
    nlohmann::json entry = {{"element", in.element},
                            {"side", static_cast<int>(in.side)},
                            {"gain", in.gain}};
    if (in.threshold) entry["threshold"] = *in.threshold;
    log.push_back(entry);
  }
  nlohmann::json j = {{"algorithm", r.algorithm},
                      {"f_s1", r.f_s1},
                      {"f_s2", r.f_s2},
                      {"f_star", r.f_star},
                      {"solution_size", r.s_star.size()},
                      {"value_queries", r.value_queries},
                      {"independence_checks", r.independence_checks},
                      {"wall_time_s", timing ? r.wall_time_s : 0.0},
                      {"s1", members_json(r.s1)},
                      {"s2", members_json(r.s2)},
                      {"s_star", members_json(r.s_star)},
                      {"solver_parameters", r.parameters},
                      {"log", log}};
  if (r.seed) j["solver_seed"] = *r.seed;
  if (!r.rng.empty()) j["rng"] = r.rng;
  return j;
}

void add_objective_flags(CLI::App* cmd, ObjectiveOptions& o) {
  cmd->add_option("--objective", o.kind, "cut, marketing or modular")
      ->check(CLI::IsMember({"cut", "marketing", "modular"}));
  cmd->add_option("--graph", o.graph, "Graph file (cut)");
  cmd->add_option("--rrsets", o.rrsets, "RR-set file per product (marketing)");
  cmd->add_option("--costs", o.costs, "Node cost file (marketing)");
  cmd->add_option("--budget", o.budget, "Budget B (marketing; default m * sum c)");
  cmd->add_option("--weights", o.weights, "Element weight file (modular)");
  cmd->add_option("--nodes", o.nodes, "Node count (marketing) or ground size (modular)");
}

struct RunOptions {
  std::string algo = "twinfast";
  ObjectiveOptions objective;
  std::string constraint;
  double epsilon = 0.1;
  double q = 0.5;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string csv;
  bool no_timing = false;
};

int run(const RunOptions& o) {
  check_algorithm(o.algo);
  const std::uint64_t seed = resolve_seed(o.seed);
  InputHashes inputs;
  auto f = build_objective(o.objective, inputs);
  auto constraint = build_constraint(o.constraint, f->ground_size(), seed, inputs);

  SolverParams params;
  params.epsilon = o.epsilon;
  params.sample_prob = o.q;
  params.seed = rep_seed(seed, 0);
  const RunReport r = solve(o.algo, *f, *constraint, params);
  const bool timing = !o.no_timing;

  const nlohmann::json report = {
      {"command", "run"},
      {"parameters",
       {{"algorithm", o.algo},
        {"objective", objective_json(o.objective)},
        {"constraint", o.constraint},
        {"constraint_description", constraint->describe()},
        {"epsilon", o.epsilon},
        {"q", o.q},
        {"seed", seed},
        {"timing", timing}}},
      {"rng", Rng::kAlgorithm},
      {"inputs", inputs},
      {"result", result_json(r, timing)}};
  emit(o.out, dump(report));
  if (!o.csv.empty()) {
    write_file(o.csv, std::string(kCsvHeader) + csv_row(r, "", 0, timing));
  }
  return kExitOk;
}

struct SweepOptions {
  std::string algos = "twinfast,samplegreedy";
  std::string axis = "k";
  std::string values;
  ObjectiveOptions objective;
  std::string constraint;
  double epsilon = 0.1;
  double q = 0.5;
  int reps = 10;
  int jobs = 1;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string svg;
  std::string manifest;
  bool no_timing = false;
};

struct Cell {
  int algo;
  int axis;
  int rep;
  std::string row;
  RunReport report;
};

int sweep(const SweepOptions& o) {
  const std::vector<std::string> algos = split(o.algos, ',');
  for (const auto& a : algos) check_algorithm(a);
  if (o.axis != "k" && o.axis != "epsilon") {
    throw UsageError("--axis must be k or epsilon");
  }
  const std::vector<double> values = parse_number_list(o.values);
  if (o.reps < 1) throw UsageError("--reps must be >= 1");
  if (o.jobs < 1) throw UsageError("--jobs must be >= 1");
  if (o.axis == "k") {
    for (double v : values) {
      if (v < 0 || v != std::floor(v)) throw UsageError("k values must be integers");
    }
    if (o.constraint.find("{k}") == std::string::npos) {
      throw UsageError("a k sweep needs {k} in --constraint");
    }
  }
  const std::uint64_t seed = resolve_seed(o.seed);
  const bool timing = !o.no_timing;

  InputHashes inputs;
  const auto f = build_objective(o.objective, inputs);
  std::vector<std::string> axis_text;
  for (double v : values) axis_text.push_back(format_double(v));
  // Resolve every constraint up front so spec errors surface before any work.
  for (const auto& text : axis_text) {
    build_constraint(o.axis == "k" ? substitute(o.constraint, "k", text) : o.constraint,
                     f->ground_size(), seed, inputs);
  }

  std::vector<Cell> cells;
  for (int a = 0; a < static_cast<int>(algos.size()); ++a) {
    const int reps = is_randomized(algos[static_cast<std::size_t>(a)]) ? o.reps : 1;
    for (int x = 0; x < static_cast<int>(values.size()); ++x) {
      for (int rep = 0; rep < reps; ++rep) cells.push_back(Cell{a, x, rep, "", RunReport()});
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    InputHashes unused;
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      Cell& cell = cells[i];
      try {
        const std::string& algo = algos[static_cast<std::size_t>(cell.algo)];
        const std::string& x = axis_text[static_cast<std::size_t>(cell.axis)];
        const auto oracle = f->clone();
        const auto constraint = build_constraint(
            o.axis == "k" ? substitute(o.constraint, "k", x) : o.constraint,
            oracle->ground_size(), seed, unused);
        SolverParams params;
        params.epsilon =
            o.axis == "epsilon" ? values[static_cast<std::size_t>(cell.axis)] : o.epsilon;
        params.sample_prob = o.q;
        params.seed = rep_seed(seed, cell.rep);
        cell.report = solve(algo, *oracle, *constraint, params);
        cell.row = csv_row(cell.report, x, cell.rep, timing);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::min<int>(o.jobs, static_cast<int>(cells.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.algo, a.axis, a.rep) < std::tie(b.algo, b.axis, b.rep);
  });
  std::string csv = kCsvHeader;
  for (const Cell& c : cells) csv += c.row;
  emit(o.out, csv);

  if (!o.svg.empty()) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<Panel> panels = {{"value queries", {}},
                                 {"wall time (s)", {}},
                                 {"utility", {}}};
    for (std::size_t a = 0; a < algos.size(); ++a) {
      for (auto& panel : panels) {
        panel.series.push_back({algos[a], std::vector<double>(values.size(), nan)});
      }
      std::vector<std::array<double, 3>> sum(values.size(), {0, 0, 0});
      std::vector<int> count(values.size(), 0);
      for (const Cell& c : cells) {
        if (c.algo != static_cast<int>(a)) continue;
        auto& s = sum[static_cast<std::size_t>(c.axis)];
        s[0] += static_cast<double>(c.report.value_queries);
        s[1] += timing ? c.report.wall_time_s : 0.0;
        s[2] += c.report.f_star;
        ++count[static_cast<std::size_t>(c.axis)];
      }
      for (std::size_t x = 0; x < values.size(); ++x) {
        if (count[x] == 0) continue;
        for (std::size_t p = 0; p < 3; ++p) {
          panels[p].series.back().y[x] = sum[x][p] / count[x];
        }
      }
    }
    write_file(o.svg, render_panels(o.axis, axis_text, panels));
  }

  const nlohmann::json manifest = {
      {"command", "sweep"},
      {"parameters",
       {{"algorithms", algos},
        {"axis", o.axis},
        {"values", values},
        {"objective", objective_json(o.objective)},
        {"constraint", o.constraint},
        {"epsilon", o.epsilon},
        {"q", o.q},
        {"reps", o.reps},
        {"seed", seed},
        {"timing", timing}}},
      {"rng", Rng::kAlgorithm},
      {"rows", cells.size()},
      {"inputs", inputs}};
  if (!o.manifest.empty()) write_file(o.manifest, dump(manifest));
  if (!o.out.empty() && o.out != "-") emit("", dump(manifest));
  return kExitOk;
}

}  // namespace

void register_run(CLI::App& app, Actions& actions) {
  auto o = std::make_shared<RunOptions>();
  CLI::App* cmd = app.add_subcommand("run", "Run one solver on one instance");
  cmd->add_option("--algo", o->algo, "twin, twinfast, samplegreedy, greedy or exact");
  add_objective_flags(cmd, o->objective);
  cmd->add_option("--constraint", o->constraint, "Constraint spec")->required();
  cmd->add_option("--epsilon", o->epsilon, "Threshold decay (twinfast)");
  cmd->add_option("--q", o->q, "Sampling probability (samplegreedy)");
  cmd->add_option("--seed", o->seed, "Master seed (default $TWINOPT_SEED, else 1)");
  cmd->add_option("--out", o->out, "JSON report (default stdout)");
  cmd->add_option("--csv", o->csv, "Also write a one-row CSV");
  cmd->add_flag("--no-timing", o->no_timing, "Report wall time as 0");
  actions.emplace_back(cmd, [o] { return run(*o); });
}

void register_sweep(CLI::App& app, Actions& actions) {
  auto o = std::make_shared<SweepOptions>();
  CLI::App* cmd = app.add_subcommand("sweep", "Run solvers across a parameter axis");
  cmd->add_option("--algos", o->algos, "Comma-separated algorithms");
  cmd->add_option("--axis", o->axis, "k (substituted for {k}) or epsilon");
  cmd->add_option("--values", o->values, "Comma-separated axis values")->required();
  add_objective_flags(cmd, o->objective);
  cmd->add_option("--constraint", o->constraint, "Constraint spec")->required();
  cmd->add_option("--epsilon", o->epsilon, "Threshold decay when not swept");
  cmd->add_option("--q", o->q, "Sampling probability (samplegreedy)");
  cmd->add_option("--reps", o->reps, "Repetitions of randomized algorithms");
  cmd->add_option("--jobs", o->jobs, "Concurrent cells");
  cmd->add_option("--seed", o->seed, "Master seed (default $TWINOPT_SEED, else 1)");
  cmd->add_option("--out", o->out, "CSV file (default stdout)");
  cmd->add_option("--svg", o->svg, "Also write charts");
  cmd->add_option("--manifest", o->manifest, "Also write the manifest here");
  cmd->add_flag("--no-timing", o->no_timing, "Report wall time as 0");
  actions.emplace_back(cmd, [o] { return sweep(*o); });
}

}  // namespace twinopt::cli
