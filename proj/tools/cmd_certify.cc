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
#include <iostream>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "cli_common.h"
#include "commands.h"
#include "twinopt/certify.h"
#include "twinopt/constraints.h"
#include "twinopt/generators.h"
#include "twinopt/objectives.h"
#include "twinopt/rng.h"
#include "twinopt/solvers.h"

namespace twinopt::cli {

namespace {

struct CertifyCommandOptions {
  int instances = 100;
  int n_min = 4;
  int n_max = 10;
  std::string constraint = "matroid";
  int p = 2;
  int groups = 2;
  int cap = 2;
  double epsilon = 0.1;
  std::string algos;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct Instance {
  std::uint64_t seed;
  int n;
  std::shared_ptr<ValueOracle> f;
  std::shared_ptr<IndependenceOracle> constraint;
};

// Max cut on ER(n, 1/2) with U[0,1] weights under one random partition
// matroid, or the intersection of p of them.
Instance make_instance(const CertifyCommandOptions& o, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  const int n = o.n_min + static_cast<int>(rng.below(
                              static_cast<std::uint64_t>(o.n_max - o.n_min + 1)));
  auto g = std::make_shared<const WeightedGraph>(assign_weights_uniform(
      gen_er(n, 0.5, derive_seed(seed, kStreamGraph)), 0.0, 1.0,
      derive_seed(seed, kStreamWeights)));
  const int p = o.constraint == "matroid" ? 1 : o.p;
  std::vector<std::shared_ptr<const IndependenceOracle>> parts;
  for (int j = 0; j < p; ++j) {
    parts.push_back(std::make_shared<PartitionMatroid>(
        assign_groups(n, o.groups,
                      derive_seed(seed, kStreamGroups + static_cast<std::uint64_t>(j))),
        o.cap));
  }
  std::shared_ptr<IndependenceOracle> c =
      p == 1 ? std::const_pointer_cast<IndependenceOracle>(parts.front())
             : std::make_shared<IntersectionSystem>(std::move(parts));
  return {seed, n, std::make_shared<CutObjective>(std::move(g)), std::move(c)};
}

struct AlgoSummary {
  int runs = 0;
  int violations = 0;
  double min_ratio = 1.0;
  double min_global_slack = std::numeric_limits<double>::infinity();
  double min_bound_slack = std::numeric_limits<double>::infinity();
  double max_budget_use = 0.0;
};

std::vector<std::string> failure_reasons(const Certificate& c) {
  std::vector<std::string> out;
  if (!c.pi_error.empty()) out.push_back(c.pi_error);
  for (const auto& s : c.structure_failures) out.push_back(s);
  for (const auto& b : c.gains.bounds) {
    if (!b.holds) out.push_back("bound " + b.name + " violated");
  }
  for (const auto& r : c.gains.residuals) {
    if (!r.holds) out.push_back("residual " + r.name + " violated");
  }
  if (!c.global.bound.holds) out.push_back("global " + c.global.form + " bound violated");
  if (!c.global.ratio_holds) out.push_back("ratio below floor");
  if (c.value_queries > c.query_budget) out.push_back("query budget exceeded");
  return out;
}

int certify(const CertifyCommandOptions& o) {
  if (o.instances < 1) throw UsageError("--instances must be >= 1");
  if (o.n_max > 20) throw UsageError("--n-max is at most 20");
  if (o.n_min < 1 || o.n_min > o.n_max) throw UsageError("need 1 <= --n-min <= --n-max");
  if (o.constraint != "matroid" && o.constraint != "psystem") {
    throw UsageError("--constraint must be matroid or psystem");
  }
  if (o.constraint == "psystem" && o.p < 1) throw UsageError("--p must be >= 1");
  if (o.groups < 1 || o.cap < 0) throw UsageError("need --groups >= 1, --cap >= 0");
  const int p = o.constraint == "matroid" ? 1 : o.p;
  const std::vector<std::string> algos = split(
      o.algos.empty() ? (p == 1 ? "twin,twinfast" : "twinfast") : o.algos, ',');
  for (const auto& a : algos) {
    if (a != "twin" && a != "twinfast") {
      throw UsageError("certify supports twin and twinfast, not '" + a + "'");
    }
  }
  const std::uint64_t master = resolve_seed(o.seed);

  std::map<std::string, AlgoSummary> summary;
  std::map<int, int> histogram;
  nlohmann::json runs = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();
  int violations = 0;
  for (int i = 0; i < o.instances; ++i) {
    const Instance inst = make_instance(o, derive_seed(master, static_cast<std::uint64_t>(i)));
    const Solution opt = exact_max(*inst.f, *inst.constraint);
    for (const auto& algo : algos) {
      const bool fast = algo == "twinfast";
      const RunReport run = fast ? twin_greedy_fast(*inst.f, *inst.constraint, o.epsilon)
                                 : twin_greedy(*inst.f, *inst.constraint);
      CertifyOptions options;
      options.variant = fast ? Variant::kThreshold : Variant::kExact;
      options.epsilon = fast ? o.epsilon : 0.0;
      options.p = p;
      const Certificate cert =
          certify_run(run, *inst.f, *inst.constraint, opt.set, opt.value, options);

      AlgoSummary& s = summary[algo];
      ++s.runs;
      nlohmann::json slacks = nlohmann::json::object();
      if (cert.pi_error.empty()) {
        for (const auto& [k, v] : cert.pi.preimage_histogram(run.log)) histogram[k] += v;
        for (const auto& b : cert.gains.bounds) {
          slacks[b.name] = b.slack();
          s.min_bound_slack = std::min(s.min_bound_slack, b.slack());
        }
        s.min_ratio = std::min(s.min_ratio, cert.global.ratio);
        s.min_global_slack = std::min(s.min_global_slack, cert.global.bound.slack());
      }
      s.max_budget_use = std::max(
          s.max_budget_use,
          static_cast<double>(cert.value_queries) / static_cast<double>(cert.query_budget));
      const bool passed = cert.passed();
      if (!passed) {
        ++s.violations;
        ++violations;
        failures.push_back({{"instance", i},
                            {"seed", inst.seed},
                            {"algorithm", algo},
                            {"reasons", failure_reasons(cert)}});
      }
      runs.push_back({{"instance", i},
                      {"seed", inst.seed},
                      {"n", inst.n},
                      {"algorithm", algo},
                      {"f_opt", opt.value},
                      {"f_star", run.f_star},
                      {"ratio", cert.global.ratio},
                      {"global_form", cert.global.form},
                      {"global_slack", cert.global.bound.slack()},
                      {"bound_slacks", slacks},
                      {"max_preimage", cert.pi_error.empty() ? cert.pi.max_preimage() : -1},
                      {"value_queries", cert.value_queries},
                      {"query_budget", cert.query_budget},
                      {"passed", passed}});
    }
  }

  nlohmann::json per_algo = nlohmann::json::object();
  for (const auto& [algo, s] : summary) {
    per_algo[algo] = {{"runs", s.runs},
                      {"violations", s.violations},
                      {"min_ratio", s.min_ratio},
                      {"min_global_slack", s.min_global_slack},
                      {"min_bound_slack", s.min_bound_slack},
                      {"max_query_budget_use", s.max_budget_use}};
  }
  nlohmann::json hist = nlohmann::json::object();
  for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
  const nlohmann::json report = {
      {"command", "certify"},
      {"parameters",
       {{"instances", o.instances},
        {"n_min", o.n_min},
        {"n_max", o.n_max},
        {"constraint", o.constraint},
        {"p", p},
        {"groups", o.groups},
        {"cap", o.cap},
        {"epsilon", o.epsilon},
        {"algorithms", algos},
        {"seed", master},
        {"tolerance", kDefaultTolerance}}},
      {"rng", Rng::kAlgorithm},
      {"summary",
       {{"runs", runs.size()},
        {"violations", violations},
        {"per_algorithm", per_algo},
        {"preimage_histogram", hist}}},
      {"failures", failures},
      {"runs", runs}};
  emit(o.out, dump(report));
  if (violations > 0) {
    std::cerr << violations << " certification violation(s)\n";
    return kExitViolation;
  }
  return kExitOk;
}

}  // namespace

void register_certify(CLI::App& app, Actions& actions) {
  auto o = std::make_shared<CertifyCommandOptions>();
  CLI::App* cmd = app.add_subcommand(
      "certify", "Check the approximation certificates on random small instances");
  cmd->add_option("--instances", o->instances, "Number of random instances");
  cmd->add_option("--n-min", o->n_min, "Smallest ground set");
  cmd->add_option("--n-max", o->n_max, "Largest ground set (<= 20)");
  cmd->add_option("--constraint", o->constraint, "matroid or psystem");
  cmd->add_option("--p", o->p, "Partition matroids intersected in psystem mode");
  cmd->add_option("--groups", o->groups, "Parts per partition matroid");
  cmd->add_option("--cap", o->cap, "Per-part cap");
  cmd->add_option("--epsilon", o->epsilon, "Threshold decay for twinfast");
  cmd->add_option("--algos", o->algos,
                  "twin and/or twinfast (default: both for matroid, twinfast for psystem)");
  cmd->add_option("--seed", o->seed, "Master seed (default $TWINOPT_SEED, else 1)");
  cmd->add_option("--out", o->out, "JSON report (default stdout)");
  actions.emplace_back(cmd, [o] { return certify(*o); });
}

}  // namespace twinopt::cli
