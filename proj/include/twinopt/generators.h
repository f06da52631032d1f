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

#ifndef TWINOPT_GENERATORS_H_
#define TWINOPT_GENERATORS_H_

#include <cstdint>
#include <vector>

#include "twinopt/element_set.h"
#include "twinopt/graph.h"
#include "twinopt/objectives.h"

namespace twinopt {

// All generators are pure functions of their arguments and seed; the
// underlying generator is Rng (mt19937_64).

// Erdos-Renyi G(n, p): every unordered pair (ordered pair when directed)
// independently with probability p. Unit weights.
WeightedGraph gen_er(int n, double p, std::uint64_t seed,
                     bool directed = false);

// Barabasi-Albert: a clique on m0 seed nodes, then each new node links to m
// distinct earlier nodes chosen proportionally to degree. Colliding targets
// are redrawn, so the result has exactly m0(m0-1)/2 + (n-m0)m edges.
WeightedGraph gen_ba(int n, int m0, int m, std::uint64_t seed);

// I.i.d. U[lo, hi] edge weights in edge order.
WeightedGraph assign_weights_uniform(WeightedGraph g, double lo, double hi,
                                     std::uint64_t seed);

// I.i.d. U[lo, hi] edge probabilities in edge order.
WeightedGraph assign_probs_uniform(WeightedGraph g, double lo, double hi,
                                   std::uint64_t seed);

// p_uv = 1 / indegree(v) on every edge of a directed graph.
WeightedGraph set_indegree_probabilities(WeightedGraph g);

// Each of n nodes uniformly into one of h groups.
std::vector<int> assign_groups(int n, int h, std::uint64_t seed);

// n i.i.d. U[lo, hi] values (node costs).
std::vector<double> uniform_values(int n, double lo, double hi,
                                   std::uint64_t seed);

// `count` RR-sets under the independent cascade model: a uniform root, then a
// reverse BFS that flips each in-edge's coin when it is first examined.
RRSetCollection gen_rr_sets(const WeightedGraph& g, int count,
                            std::uint64_t seed);

// Exact expected number of nodes reached from `seeds` under independent edge
// liveness, by enumerating all 2^|E| live-edge patterns (|E| <= 20).
double ic_exact_spread(const WeightedGraph& g, const ElementSet& seeds);

}  // namespace twinopt

#endif  // TWINOPT_GENERATORS_H_
