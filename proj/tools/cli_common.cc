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
#include "cli_common.h"

#include <cstdlib>
#include <iostream>
#include <string>

#include "twinopt/constraints.h"
#include "twinopt/generators.h"
#include "twinopt/io.h"
#include "twinopt/objectives.h"
#include "twinopt/rng.h"

namespace twinopt::cli {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TWINOPT_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("TWINOPT_SEED is not an unsigned integer");
  }
  return 1;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

namespace {

double to_number(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("'" + s + "' is not a number");
}

int to_count(const std::string& s, const std::string& what) {
  const double v = to_number(s);
  if (v < 0 || v != static_cast<int>(v)) {
    throw UsageError(what + " must be a non-negative integer, got '" + s + "'");
  }
  return static_cast<int>(v);
}

}  // namespace

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(to_number(part));
  return out;
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto v = parse_number_list(text);
  if (v.size() != 2 || v[0] > v[1]) {
    throw UsageError("expected 'lo,hi' with lo <= hi, got '" + text + "'");
  }
  return {v[0], v[1]};
}

std::string substitute(std::string text, const std::string& key,
                       const std::string& value) {
  const std::string token = "{" + key + "}";
  for (std::size_t at = text.find(token); at != std::string::npos;
       at = text.find(token, at + value.size())) {
    text.replace(at, token.size(), value);
  }
  return text;
}

namespace {

std::shared_ptr<IndependenceOracle> build_term(const std::string& term, int n,
                                               std::uint64_t seed,
                                               InputHashes& inputs) {
  const auto f = split(term, ':');
  const std::string& kind = f[0];
  if (kind == "uniform" && f.size() == 2) {
    return std::make_shared<UniformMatroid>(n, to_count(f[1], "K"));
  }
  if (kind == "partition" && f.size() == 3) {
    auto part = read_partition(f[1], n);
    inputs[f[1]] = sha256_file(f[1]);
    return std::make_shared<PartitionMatroid>(std::move(part),
                                              to_count(f[2], "K"));
  }
  if (kind == "groups" && f.size() == 3) {
    const int h = to_count(f[1], "H");
    if (h < 1) throw UsageError("groups needs H >= 1");
    return std::make_shared<PartitionMatroid>(
        assign_groups(n, h, derive_seed(seed, kStreamGroups)),
        to_count(f[2], "K"));
  }
  if (kind == "seed" && (f.size() == 4 || f.size() == 2)) {
    SeedConfig c;
    if (f.size() == 4) {
      c = {to_count(f[1], "V"), to_count(f[2], "M"), to_count(f[3], "K")};
    } else {
      c = read_seed_config(f[1]);
      inputs[f[1]] = sha256_file(f[1]);
    }
    if (c.num_nodes * c.num_products != n) {
      throw UsageError("seed matroid covers " +
                       std::to_string(c.num_nodes * c.num_products) +
                       " elements but the objective has " + std::to_string(n));
    }
    return std::make_shared<SeedMatroid>(c.num_nodes, c.num_products, c.k);
  }
  throw UsageError("bad constraint term '" + term + "'");
}

}  // namespace

std::shared_ptr<IndependenceOracle> build_constraint(const std::string& spec,
                                                     int n,
                                                     std::uint64_t seed,
                                                     InputHashes& inputs) {
  if (spec.empty()) throw UsageError("empty constraint spec");
  std::vector<std::shared_ptr<const IndependenceOracle>> terms;
  try {
    for (const auto& term : split(spec, '+')) {
      terms.push_back(build_term(term, n, seed, inputs));
    }
  } catch (const ContractViolation& e) {
    throw UsageError("constraint '" + spec + "': " + e.what());
  }
  if (terms.size() == 1) {
    return std::const_pointer_cast<IndependenceOracle>(terms.front());
  }
  return std::make_shared<IntersectionSystem>(std::move(terms));
}

std::shared_ptr<ValueOracle> build_objective(const ObjectiveOptions& o,
                                             InputHashes& inputs) {
  if (o.kind == "cut") {
    if (o.graph.empty()) throw UsageError("cut objective needs --graph");
    auto g = std::make_shared<const WeightedGraph>(read_graph(o.graph));
    inputs[o.graph] = sha256_file(o.graph);
    return std::make_shared<CutObjective>(std::move(g));
  }
  if (o.kind == "modular") {
    if (o.weights.empty() || o.nodes < 0) {
      throw UsageError("modular objective needs --weights and --nodes");
    }
    auto w = read_values(o.weights, o.nodes);
    inputs[o.weights] = sha256_file(o.weights);
    return std::make_shared<ModularObjective>(std::move(w));
  }
  if (o.kind == "marketing") {
    if (o.rrsets.empty() || o.nodes < 1) {
      throw UsageError("marketing objective needs --rrsets and --nodes");
    }
    std::vector<std::shared_ptr<const RRSetCollection>> rr;
    for (const auto& path : o.rrsets) {
      rr.push_back(std::make_shared<const RRSetCollection>(
          read_rrsets(path, o.nodes)));
      inputs[path] = sha256_file(path);
    }
    std::vector<double> costs(static_cast<std::size_t>(o.nodes), 0.0);
    if (!o.costs.empty()) {
      costs = read_values(o.costs, o.nodes);
      inputs[o.costs] = sha256_file(o.costs);
    }
    return std::make_shared<MarketingObjective>(std::move(rr), std::move(costs),
                                                o.budget);
  }
  throw UsageError("unknown objective '" + o.kind + "'");
}

nlohmann::json objective_json(const ObjectiveOptions& o) {
  nlohmann::json j = {{"kind", o.kind}};
  if (!o.graph.empty()) j["graph"] = o.graph;
  if (!o.rrsets.empty()) j["rrsets"] = o.rrsets;
  if (!o.costs.empty()) j["costs"] = o.costs;
  if (!o.weights.empty()) j["weights"] = o.weights;
  if (o.nodes >= 0) j["nodes"] = o.nodes;
  if (o.budget) j["budget"] = *o.budget;
  return j;
}

nlohmann::json members_json(const ElementSet& s) {
  return nlohmann::json(s.members());
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(path, text);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace twinopt::cli
