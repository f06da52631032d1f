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
#include <memory>
#include <optional>
#include <string>

#include "cli_common.h"
#include "commands.h"
#include "twinopt/generators.h"
#include "twinopt/io.h"
#include "twinopt/rng.h"

namespace twinopt::cli {

namespace {

struct GenGraphOptions {
  std::string model = "er";
  int n = -1;
  double p = -1.0;
  int m0 = -1;
  int m = -1;
  std::string weights = "1,1";
  std::string probs = "1,1";
  bool directed = false;
  int groups = 0;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string partition_out;
  std::string manifest;
};

int gen_graph(const GenGraphOptions& o) {
  if (o.n < 0) throw UsageError("--n is required");
  const std::uint64_t seed = resolve_seed(o.seed);
  nlohmann::json params = {{"model", o.model}, {"n", o.n},
                           {"directed", o.directed}, {"groups", o.groups}};
  WeightedGraph g;
  if (o.model == "er") {
    if (o.p < 0.0) throw UsageError("ER needs --p");
    params["p"] = o.p;
    g = gen_er(o.n, o.p, derive_seed(seed, kStreamGraph), o.directed);
  } else if (o.model == "ba") {
    if (o.directed) throw UsageError("BA graphs are undirected");
    if (o.m0 < 0 || o.m < 0) throw UsageError("BA needs --m0 and --m");
    params["m0"] = o.m0;
    params["m"] = o.m;
    g = gen_ba(o.n, o.m0, o.m, derive_seed(seed, kStreamGraph));
  } else {
    throw UsageError("unknown model '" + o.model + "'");
  }
  if (o.directed) {
    const auto [lo, hi] = parse_range(o.probs);
    params["probs"] = {lo, hi};
    g = assign_probs_uniform(std::move(g), lo, hi, derive_seed(seed, kStreamProbs));
  } else {
    const auto [lo, hi] = parse_range(o.weights);
    params["weights"] = {lo, hi};
    g = assign_weights_uniform(std::move(g), lo, hi,
                               derive_seed(seed, kStreamWeights));
  }

  nlohmann::json outputs = nlohmann::json::object();
  const std::string graph_text = format_graph(g);
  emit(o.out, graph_text);
  outputs[o.out.empty() ? "-" : o.out] = sha256_hex(graph_text);
  if (o.groups > 0) {
    if (o.out.empty() && o.partition_out.empty()) {
      throw UsageError("--groups needs --out or --partition-out");
    }
    const std::string path =
        o.partition_out.empty() ? o.out + ".partition" : o.partition_out;
    const std::string text =
        format_partition(assign_groups(o.n, o.groups, derive_seed(seed, kStreamGroups)));
    write_file(path, text);
    outputs[path] = sha256_hex(text);
  }

  const nlohmann::json manifest = {
      {"command", "gen-graph"}, {"parameters", params},
      {"seed", seed},           {"rng", Rng::kAlgorithm},
      {"edges", g.num_edges()}, {"outputs", outputs}};
  if (!o.manifest.empty()) write_file(o.manifest, dump(manifest));
  if (!o.out.empty()) emit("", dump(manifest));
  return kExitOk;
}

struct GenRRSetsOptions {
  std::string graph;
  int count = 0;
  bool indegree_probs = false;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string manifest;
};

// Each undirected edge becomes two arcs with probability 1.
WeightedGraph as_directed(const WeightedGraph& g) {
  if (g.directed()) return g;
  WeightedGraph d(g.num_nodes(), true);
  for (const Edge& e : g.edges()) {
    d.add_edge(e.u, e.v);
    d.add_edge(e.v, e.u);
  }
  return d;
}

int gen_rrsets(const GenRRSetsOptions& o) {
  if (o.count < 1) throw UsageError("--count must be >= 1");
  const std::uint64_t seed = resolve_seed(o.seed);
  WeightedGraph g = as_directed(read_graph(o.graph));
  if (o.indegree_probs) g = set_indegree_probabilities(std::move(g));
  const RRSetCollection z = gen_rr_sets(g, o.count, derive_seed(seed, kStreamRRSets));
  const std::string text = format_rrsets(z);
  emit(o.out, text);

  const nlohmann::json manifest = {
      {"command", "gen-rrsets"},
      {"parameters",
       {{"graph", o.graph}, {"count", o.count}, {"indegree_probs", o.indegree_probs}}},
      {"seed", seed},
      {"rng", Rng::kAlgorithm},
      {"inputs", {{o.graph, sha256_file(o.graph)}}},
      {"outputs", {{o.out.empty() ? "-" : o.out, sha256_hex(text)}}}};
  if (!o.manifest.empty()) write_file(o.manifest, dump(manifest));
  if (!o.out.empty()) emit("", dump(manifest));
  return kExitOk;
}

}  // namespace

void register_generate(CLI::App& app, Actions& actions) {
  auto g = std::make_shared<GenGraphOptions>();
  CLI::App* graph = app.add_subcommand("gen-graph", "Generate a random graph");
  graph->add_option("--model", g->model, "er or ba")->check(CLI::IsMember({"er", "ba"}));
  graph->add_option("--n", g->n, "Number of nodes")->required();
  graph->add_option("--p", g->p, "ER edge probability");
  graph->add_option("--m0", g->m0, "BA seed clique size");
  graph->add_option("--m", g->m, "BA edges per new node");
  graph->add_option("--weights", g->weights, "Edge weights U[lo,hi] (undirected)");
  graph->add_option("--probs", g->probs, "Edge probabilities U[lo,hi] (directed)");
  graph->add_flag("--directed", g->directed, "Directed ER graph");
  graph->add_option("--groups", g->groups, "Also write a random partition into h groups");
  graph->add_option("--seed", g->seed, "Master seed (default $TWINOPT_SEED, else 1)");
  graph->add_option("--out", g->out, "Graph file (default stdout)");
  graph->add_option("--partition-out", g->partition_out,
                    "Partition file (default <out>.partition)");
  graph->add_option("--manifest", g->manifest, "Also write the manifest here");
  actions.emplace_back(graph, [g] { return gen_graph(*g); });

  auto r = std::make_shared<GenRRSetsOptions>();
  CLI::App* rr = app.add_subcommand("gen-rrsets", "Sample reverse-reachable sets");
  rr->add_option("--graph", r->graph, "Graph file")->required();
  rr->add_option("--count", r->count, "Number of RR-sets")->required();
  rr->add_flag("--indegree-probs", r->indegree_probs, "Use p_uv = 1/indegree(v)");
  rr->add_option("--seed", r->seed, "Master seed (default $TWINOPT_SEED, else 1)");
  rr->add_option("--out", r->out, "RR-set file (default stdout)");
  rr->add_option("--manifest", r->manifest, "Also write the manifest here");
  actions.emplace_back(rr, [r] { return gen_rrsets(*r); });
}

}  // namespace twinopt::cli
