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

#ifndef TWINOPT_GRAPH_H_
#define TWINOPT_GRAPH_H_

#include <vector>

namespace twinopt {

using Node = int;

struct Edge {
  Node u = 0;
  Node v = 0;
  // Content capacity for monitoring; >= 0.
  double weight = 1.0;
  // Activation probability p_uv for influence; in [0, 1].
  double prob = 1.0;
};

// Edge list over nodes 0..n-1. Undirected graphs store each edge once.
class WeightedGraph {
 public:
  explicit WeightedGraph(int num_nodes = 0, bool directed = false);

  // Throws ContractViolation on bad endpoints, negative or non-finite weight,
  // or a probability outside [0, 1].
  void add_edge(Node u, Node v, double weight = 1.0, double prob = 1.0);

  int num_nodes() const { return num_nodes_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return edges_; }

  void set_weight(int edge, double weight);
  void set_prob(int edge, double prob);

  // Edge ids entering each node (head == v); directed graphs only.
  std::vector<std::vector<int>> in_edges() const;

 private:
  int num_nodes_;
  bool directed_;
  std::vector<Edge> edges_;
};

}  // namespace twinopt

#endif  // TWINOPT_GRAPH_H_
