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

#ifndef TWINOPT_OBJECTIVES_H_
#define TWINOPT_OBJECTIVES_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "twinopt/element_set.h"
#include "twinopt/graph.h"
#include "twinopt/oracle.h"

namespace twinopt {

// Weighted cut over the graph's nodes. Undirected: an edge counts when
// exactly one endpoint is in S. Directed: (u, v) counts when u in S and
// v not in S. Non-negative, submodular, non-monotone; f({}) = f(V) = 0.
class CutObjective : public ValueOracle {
 public:
  explicit CutObjective(std::shared_ptr<const WeightedGraph> graph);

  const WeightedGraph& graph() const { return *graph_; }

  std::string name() const override { return "cut"; }
  std::unique_ptr<ValueOracle> clone() const override;

 protected:
  double value(const ElementSet& s) const override;
  double gain_from(const ElementSet& base, double base_value,
                   Element e) const override;

 private:
  struct Arc {
    Node to;
    double weight;
  };
  struct Adjacency {
    std::vector<int> offsets;
    std::vector<Arc> arcs;
  };

  std::shared_ptr<const WeightedGraph> graph_;
  // Undirected: all incident edges in `out`. Directed: out- and in-arcs.
  std::shared_ptr<const Adjacency> out_;
  std::shared_ptr<const Adjacency> in_;
};

// f(S) = sum of w(e) over e in S. Weights may be negative.
class ModularObjective : public ValueOracle {
 public:
  explicit ModularObjective(std::vector<double> weights);

  std::string name() const override { return "modular"; }
  std::unique_ptr<ValueOracle> clone() const override;

 protected:
  double value(const ElementSet& s) const override;
  double gain_from(const ElementSet& base, double base_value,
                   Element e) const override;

 private:
  std::shared_ptr<const std::vector<double>> weights_;
};

// Weighted coverage: element e covers items covers[e]; f(S) is the total
// weight of items covered by S. Monotone submodular.
class CoverageObjective : public ValueOracle {
 public:
  CoverageObjective(std::vector<std::vector<int>> covers,
                    std::vector<double> item_weights);

  std::string name() const override { return "coverage"; }
  std::unique_ptr<ValueOracle> clone() const override;

 protected:
  double value(const ElementSet& s) const override;
  double gain_from(const ElementSet& base, double base_value,
                   Element e) const override;

 private:
  struct Data {
    std::vector<std::vector<int>> covers;
    std::vector<std::vector<Element>> covered_by;
    std::vector<double> item_weights;
  };
  CoverageObjective(const CoverageObjective& other) = default;

  std::shared_ptr<const Data> data_;
};

// Adapter for an arbitrary set function; used for fixtures.
class LambdaObjective : public ValueOracle {
 public:
  LambdaObjective(int n, std::function<double(const ElementSet&)> fn,
                  std::string name = "lambda");

  std::string name() const override { return name_; }
  std::unique_ptr<ValueOracle> clone() const override;

 protected:
  double value(const ElementSet& s) const override { return fn_(s); }

 private:
  std::function<double(const ElementSet&)> fn_;
  std::string name_;
};

// A collection Z of reverse-reachable sets over nodes 0..n-1, stored
// compactly with an inverted node -> set index.
class RRSetCollection {
 public:
  RRSetCollection(int num_nodes, std::vector<std::vector<Node>> sets,
                  std::optional<std::uint64_t> source_seed = std::nullopt);

  int num_nodes() const { return num_nodes_; }
  int num_sets() const { return static_cast<int>(offsets_.size()) - 1; }
  std::optional<std::uint64_t> source_seed() const { return source_seed_; }

  std::span<const Node> set(int i) const;
  // Ids of the sets containing node u.
  std::span<const int> sets_containing(Node u) const;

 private:
  int num_nodes_;
  std::vector<int> offsets_;
  std::vector<Node> members_;
  std::vector<int> node_offsets_;
  std::vector<int> node_sets_;
  std::optional<std::uint64_t> source_seed_;
};

// sum over R in Z of |V| * min{1, |A n R|} / |Z|.
double rr_estimate(const RRSetCollection& z, const ElementSet& a);

// Multi-product revenue over V x [m] (ids u * m + i):
//   f({}) = 0,
//   f(S)  = sum_i est_i(S_i) + (B - sum_i sum_{v in S_i} c(v))   for S != {},
// where est_i is the RR-set estimator of product i.
class MarketingObjective : public ValueOracle {
 public:
  // budget defaults to m * sum_u c(u).
  MarketingObjective(std::vector<std::shared_ptr<const RRSetCollection>> rr,
                     std::vector<double> costs,
                     std::optional<double> budget = std::nullopt);

  int num_nodes() const { return num_nodes_; }
  int num_products() const { return static_cast<int>(rr_.size()); }
  double budget() const { return budget_; }
  Element id(Node u, int product) const { return u * num_products() + product; }

  std::string name() const override { return "marketing"; }
  std::unique_ptr<ValueOracle> clone() const override;

 protected:
  double value(const ElementSet& s) const override;
  double gain_from(const ElementSet& base, double base_value,
                   Element e) const override;

 private:
  MarketingObjective(const MarketingObjective& other) = default;

  std::vector<std::shared_ptr<const RRSetCollection>> rr_;
  std::shared_ptr<const std::vector<double>> costs_;
  int num_nodes_;
  double budget_;
};

}  // namespace twinopt

#endif  // TWINOPT_OBJECTIVES_H_
