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

#include "twinopt/graph.h"

#include <cmath>
#include <string>

#include "twinopt/element_set.h"

namespace twinopt {

namespace {

void check_weight(double weight) {
  if (!std::isfinite(weight) || weight < 0.0) {
    throw ContractViolation("edge weight must be finite and >= 0");
  }
}

void check_prob(double prob) {
  if (!(prob >= 0.0 && prob <= 1.0)) {
    throw ContractViolation("edge probability must lie in [0, 1]");
  }
}

}  // namespace

WeightedGraph::WeightedGraph(int num_nodes, bool directed)
    : num_nodes_(num_nodes), directed_(directed) {
  if (num_nodes < 0) throw ContractViolation("node count must be >= 0");
}

void WeightedGraph::add_edge(Node u, Node v, double weight, double prob) {
  if (u < 0 || u >= num_nodes_ || v < 0 || v >= num_nodes_) {
    throw ContractViolation("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") outside " +
                            std::to_string(num_nodes_) + " nodes");
  }
  check_weight(weight);
  check_prob(prob);
  edges_.push_back(Edge{u, v, weight, prob});
}

void WeightedGraph::set_weight(int edge, double weight) {
  check_weight(weight);
  edges_.at(static_cast<std::size_t>(edge)).weight = weight;
}

void WeightedGraph::set_prob(int edge, double prob) {
  check_prob(prob);
  edges_.at(static_cast<std::size_t>(edge)).prob = prob;
}

std::vector<std::vector<int>> WeightedGraph::in_edges() const {
  if (!directed_) {
    throw ContractViolation("in_edges() needs a directed graph");
  }
  std::vector<std::vector<int>> in(static_cast<std::size_t>(num_nodes_));
  for (int i = 0; i < num_edges(); ++i) {
    in[static_cast<std::size_t>(edges_[static_cast<std::size_t>(i)].v)]
        .push_back(i);
  }
  return in;
}

}  // namespace twinopt
