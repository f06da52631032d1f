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

#include "twinopt/generators.h"

#include <algorithm>
#include <string>
#include <utility>

#include "twinopt/rng.h"

namespace twinopt {

WeightedGraph gen_er(int n, double p, std::uint64_t seed, bool directed) {
  if (n < 0) throw ContractViolation("ER needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw ContractViolation("ER needs p in [0, 1]");
  Rng rng(seed);
  WeightedGraph g(n, directed);
  for (Node u = 0; u < n; ++u) {
    for (Node v = directed ? 0 : u + 1; v < n; ++v) {
      if (u == v) continue;
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

WeightedGraph gen_ba(int n, int m0, int m, std::uint64_t seed) {
  if (!(m >= 1 && m <= m0 && m0 <= n)) {
    throw ContractViolation("BA needs 1 <= m <= m0 <= n");
  }
  Rng rng(seed);
  WeightedGraph g(n, /*directed=*/false);
  // Every edge endpoint, so a uniform pick is a degree-proportional pick.
  std::vector<Node> endpoints;
  endpoints.reserve(static_cast<std::size_t>(m0) * m0 +
                    2 * static_cast<std::size_t>(n - m0) * m);
  for (Node u = 0; u < m0; ++u) {
    for (Node v = u + 1; v < m0; ++v) {
      g.add_edge(u, v);
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Node> targets;
  for (Node t = m0; t < n; ++t) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const Node pick =
          endpoints.empty()
              ? static_cast<Node>(rng.below(static_cast<std::uint64_t>(t)))
              : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) {
        targets.push_back(pick);
      }
    }
    for (Node v : targets) {
      g.add_edge(t, v);
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return g;
}

WeightedGraph assign_weights_uniform(WeightedGraph g, double lo, double hi,
                                     std::uint64_t seed) {
  if (!(lo <= hi)) throw ContractViolation("weights need lo <= hi");
  Rng rng(seed);
  for (int i = 0; i < g.num_edges(); ++i) g.set_weight(i, rng.uniform(lo, hi));
  return g;
}

WeightedGraph assign_probs_uniform(WeightedGraph g, double lo, double hi,
                                   std::uint64_t seed) {
  if (!(0.0 <= lo && lo <= hi && hi <= 1.0)) {
    throw ContractViolation("probabilities need 0 <= lo <= hi <= 1");
  }
  Rng rng(seed);
  for (int i = 0; i < g.num_edges(); ++i) g.set_prob(i, rng.uniform(lo, hi));
  return g;
}

WeightedGraph set_indegree_probabilities(WeightedGraph g) {
  const auto in = g.in_edges();
  for (const auto& edges : in) {
    for (int i : edges) g.set_prob(i, 1.0 / static_cast<double>(edges.size()));
  }
  return g;
}

std::vector<int> assign_groups(int n, int h, std::uint64_t seed) {
  if (h < 1) throw ContractViolation("need at least one group");
  Rng rng(seed);
  std::vector<int> part(static_cast<std::size_t>(n));
  for (int& p : part) p = static_cast<int>(rng.below(static_cast<std::uint64_t>(h)));
  return part;
}

std::vector<double> uniform_values(int n, double lo, double hi,
                                   std::uint64_t seed) {
  if (!(lo <= hi)) throw ContractViolation("values need lo <= hi");
  Rng rng(seed);
  std::vector<double> out(static_cast<std::size_t>(n));
  for (double& x : out) x = rng.uniform(lo, hi);
  return out;
}

RRSetCollection gen_rr_sets(const WeightedGraph& g, int count,
                            std::uint64_t seed) {
  if (count < 1) throw ContractViolation("need at least one RR-set");
  if (g.num_nodes() < 1) throw ContractViolation("RR-sets need nodes");
  const auto in = g.in_edges();
  const auto& edges = g.edges();
  Rng rng(seed);

  std::vector<std::vector<Node>> sets;
  sets.reserve(static_cast<std::size_t>(count));
  std::vector<int> stamp(static_cast<std::size_t>(g.num_nodes()), -1);
  std::vector<Node> queue;
  for (int s = 0; s < count; ++s) {
    const Node root = static_cast<Node>(
        rng.below(static_cast<std::uint64_t>(g.num_nodes())));
    queue.assign(1, root);
    stamp[static_cast<std::size_t>(root)] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int id : in[static_cast<std::size_t>(queue[head])]) {
        const Edge& edge = edges[static_cast<std::size_t>(id)];
        if (stamp[static_cast<std::size_t>(edge.u)] == s) continue;
        if (rng.bernoulli(edge.prob)) {
          stamp[static_cast<std::size_t>(edge.u)] = s;
          queue.push_back(edge.u);
        }
      }
    }
    sets.push_back(queue);
  }
  return RRSetCollection(g.num_nodes(), std::move(sets), seed);
}

double ic_exact_spread(const WeightedGraph& g, const ElementSet& seeds) {
  const int m = g.num_edges();
  if (m > 20) throw ContractViolation("exact spread enumerates at most 20 edges");
  if (seeds.universe() != g.num_nodes()) {
    throw ContractViolation("seed set universe does not match the graph");
  }
  const auto& edges = g.edges();
  const int n = g.num_nodes();
  double expected = 0.0;
  std::vector<char> reached(static_cast<std::size_t>(n));
  std::vector<Node> queue;
  for (std::uint32_t live = 0; live < (std::uint32_t{1} << m); ++live) {
    double prob = 1.0;
    for (int i = 0; i < m; ++i) {
      const double p = edges[static_cast<std::size_t>(i)].prob;
      prob *= (live >> i & 1u) ? p : 1.0 - p;
    }
    if (prob == 0.0) continue;
    std::fill(reached.begin(), reached.end(), 0);
    queue = seeds.members();
    for (Node u : queue) reached[static_cast<std::size_t>(u)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Node u = queue[head];
      for (int i = 0; i < m; ++i) {
        if (!(live >> i & 1u)) continue;
        const Edge& edge = edges[static_cast<std::size_t>(i)];
        Node next = -1;
        if (edge.u == u) next = edge.v;
        else if (!g.directed() && edge.v == u) next = edge.u;
        if (next >= 0 && !reached[static_cast<std::size_t>(next)]) {
          reached[static_cast<std::size_t>(next)] = 1;
          queue.push_back(next);
        }
      }
    }
    expected += prob * static_cast<double>(queue.size());
  }
  return expected;
}

}  // namespace twinopt
