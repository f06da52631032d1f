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

#include "twinopt/objectives.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

namespace twinopt {

// --- CutObjective ----------------------------------------------------------

CutObjective::CutObjective(std::shared_ptr<const WeightedGraph> graph)
    : ValueOracle(graph ? graph->num_nodes() : 0), graph_(std::move(graph)) {
  if (!graph_) throw ContractViolation("cut objective needs a graph");
  const int n = graph_->num_nodes();

  auto build = [n](const std::vector<Edge>& edges, bool forward,
                   bool both) {
    auto adj = std::make_shared<Adjacency>();
    adj->offsets.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const Edge& edge : edges) {
      if (edge.u == edge.v) continue;
      if (both || forward) ++adj->offsets[static_cast<std::size_t>(edge.u) + 1];
      if (both || !forward) ++adj->offsets[static_cast<std::size_t>(edge.v) + 1];
    }
    std::partial_sum(adj->offsets.begin(), adj->offsets.end(),
                     adj->offsets.begin());
    adj->arcs.resize(static_cast<std::size_t>(adj->offsets.back()));
    std::vector<int> fill(adj->offsets.begin(), adj->offsets.end() - 1);
    for (const Edge& edge : edges) {
      if (edge.u == edge.v) continue;
      if (both || forward) {
        adj->arcs[static_cast<std::size_t>(fill[static_cast<std::size_t>(edge.u)]++)] =
            Arc{edge.v, edge.weight};
      }
      if (both || !forward) {
        adj->arcs[static_cast<std::size_t>(fill[static_cast<std::size_t>(edge.v)]++)] =
            Arc{edge.u, edge.weight};
      }
    }
    return std::shared_ptr<const Adjacency>(std::move(adj));
  };

  if (graph_->directed()) {
    out_ = build(graph_->edges(), /*forward=*/true, /*both=*/false);
    in_ = build(graph_->edges(), /*forward=*/false, /*both=*/false);
  } else {
    out_ = build(graph_->edges(), /*forward=*/true, /*both=*/true);
  }
}

std::unique_ptr<ValueOracle> CutObjective::clone() const {
  return std::unique_ptr<ValueOracle>(new CutObjective(*this));
}

double CutObjective::value(const ElementSet& s) const {
  double total = 0.0;
  const bool directed = graph_->directed();
  for (const Edge& edge : graph_->edges()) {
    const bool in_u = s.contains(edge.u);
    const bool in_v = s.contains(edge.v);
    if (directed ? (in_u && !in_v) : (in_u != in_v)) total += edge.weight;
  }
  return total;
}

double CutObjective::gain_from(const ElementSet& base, double /*base_value*/,
                               Element e) const {
  // Adding e cuts its arcs to nodes outside the set and un-cuts the arcs that
  // previously crossed into e.
  double delta = 0.0;
  const auto& out = *out_;
  for (int i = out.offsets[static_cast<std::size_t>(e)];
       i < out.offsets[static_cast<std::size_t>(e) + 1]; ++i) {
    const Arc& arc = out.arcs[static_cast<std::size_t>(i)];
    if (base.contains(arc.to)) {
      if (!in_) delta -= arc.weight;
    } else {
      delta += arc.weight;
    }
  }
  if (in_) {
    const auto& in = *in_;
    for (int i = in.offsets[static_cast<std::size_t>(e)];
         i < in.offsets[static_cast<std::size_t>(e) + 1]; ++i) {
      const Arc& arc = in.arcs[static_cast<std::size_t>(i)];
      if (base.contains(arc.to)) delta -= arc.weight;
    }
  }
  return delta;
}

// --- ModularObjective ------------------------------------------------------

ModularObjective::ModularObjective(std::vector<double> weights)
    : ValueOracle(static_cast<int>(weights.size())),
      weights_(std::make_shared<const std::vector<double>>(std::move(weights))) {}

std::unique_ptr<ValueOracle> ModularObjective::clone() const {
  return std::unique_ptr<ValueOracle>(new ModularObjective(*this));
}

double ModularObjective::value(const ElementSet& s) const {
  double total = 0.0;
  s.for_each([&](Element e) { total += (*weights_)[static_cast<std::size_t>(e)]; });
  return total;
}

double ModularObjective::gain_from(const ElementSet&, double,
                                   Element e) const {
  return (*weights_)[static_cast<std::size_t>(e)];
}

// --- CoverageObjective -----------------------------------------------------

CoverageObjective::CoverageObjective(std::vector<std::vector<int>> covers,
                                     std::vector<double> item_weights)
    : ValueOracle(static_cast<int>(covers.size())) {
  auto data = std::make_shared<Data>();
  data->covered_by.resize(item_weights.size());
  for (std::size_t e = 0; e < covers.size(); ++e) {
    for (int item : covers[e]) {
      if (item < 0 || static_cast<std::size_t>(item) >= item_weights.size()) {
        throw ContractViolation("coverage item id out of range");
      }
      data->covered_by[static_cast<std::size_t>(item)].push_back(
          static_cast<Element>(e));
    }
  }
  data->covers = std::move(covers);
  data->item_weights = std::move(item_weights);
  data_ = std::move(data);
}

std::unique_ptr<ValueOracle> CoverageObjective::clone() const {
  return std::unique_ptr<ValueOracle>(new CoverageObjective(*this));
}

double CoverageObjective::value(const ElementSet& s) const {
  std::vector<char> covered(data_->item_weights.size(), 0);
  double total = 0.0;
  s.for_each([&](Element e) {
    for (int item : data_->covers[static_cast<std::size_t>(e)]) {
      char& c = covered[static_cast<std::size_t>(item)];
      if (!c) {
        c = 1;
        total += data_->item_weights[static_cast<std::size_t>(item)];
      }
    }
  });
  return total;
}

double CoverageObjective::gain_from(const ElementSet& base, double,
                                    Element e) const {
  double delta = 0.0;
  const auto& items = data_->covers[static_cast<std::size_t>(e)];
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int item = items[i];
    // Count each item once even if listed twice for e.
    bool repeated = false;
    for (std::size_t j = 0; j < i; ++j) repeated |= items[j] == item;
    if (repeated) continue;
    bool covered = false;
    for (Element other : data_->covered_by[static_cast<std::size_t>(item)]) {
      if (base.contains(other)) {
        covered = true;
        break;
      }
    }
    if (!covered) delta += data_->item_weights[static_cast<std::size_t>(item)];
  }
  return delta;
}

// --- LambdaObjective -------------------------------------------------------

LambdaObjective::LambdaObjective(int n,
                                 std::function<double(const ElementSet&)> fn,
                                 std::string name)
    : ValueOracle(n), fn_(std::move(fn)), name_(std::move(name)) {}

std::unique_ptr<ValueOracle> LambdaObjective::clone() const {
  return std::unique_ptr<ValueOracle>(new LambdaObjective(*this));
}

// --- RRSetCollection -------------------------------------------------------

RRSetCollection::RRSetCollection(int num_nodes,
                                 std::vector<std::vector<Node>> sets,
                                 std::optional<std::uint64_t> source_seed)
    : num_nodes_(num_nodes), source_seed_(source_seed) {
  if (num_nodes < 0) throw ContractViolation("node count must be >= 0");
  offsets_.reserve(sets.size() + 1);
  offsets_.push_back(0);
  node_offsets_.assign(static_cast<std::size_t>(num_nodes) + 1, 0);
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    for (Node u : set) {
      if (u < 0 || u >= num_nodes) {
        throw ContractViolation("RR-set member " + std::to_string(u) +
                                " outside " + std::to_string(num_nodes) +
                                " nodes");
      }
      members_.push_back(u);
      ++node_offsets_[static_cast<std::size_t>(u) + 1];
    }
    offsets_.push_back(static_cast<int>(members_.size()));
  }
  std::partial_sum(node_offsets_.begin(), node_offsets_.end(),
                   node_offsets_.begin());
  node_sets_.resize(static_cast<std::size_t>(node_offsets_.back()));
  std::vector<int> fill(node_offsets_.begin(), node_offsets_.end() - 1);
  for (int i = 0; i < num_sets(); ++i) {
    for (Node u : set(i)) {
      node_sets_[static_cast<std::size_t>(fill[static_cast<std::size_t>(u)]++)] = i;
    }
  }
}

std::span<const Node> RRSetCollection::set(int i) const {
  const auto begin = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i)]);
  const auto end = static_cast<std::size_t>(offsets_[static_cast<std::size_t>(i) + 1]);
  return std::span<const Node>(members_).subspan(begin, end - begin);
}

std::span<const int> RRSetCollection::sets_containing(Node u) const {
  const auto begin = static_cast<std::size_t>(node_offsets_[static_cast<std::size_t>(u)]);
  const auto end = static_cast<std::size_t>(node_offsets_[static_cast<std::size_t>(u) + 1]);
  return std::span<const int>(node_sets_).subspan(begin, end - begin);
}

double rr_estimate(const RRSetCollection& z, const ElementSet& a) {
  if (z.num_sets() < 1) throw ContractViolation("RR-set collection is empty");
  if (a.universe() != z.num_nodes()) {
    throw ContractViolation("seed set universe does not match the graph");
  }
  std::vector<char> hit(static_cast<std::size_t>(z.num_sets()), 0);
  long covered = 0;
  a.for_each([&](Element u) {
    for (int r : z.sets_containing(u)) {
      if (!hit[static_cast<std::size_t>(r)]) {
        hit[static_cast<std::size_t>(r)] = 1;
        ++covered;
      }
    }
  });
  return static_cast<double>(z.num_nodes()) * static_cast<double>(covered) /
         static_cast<double>(z.num_sets());
}

// --- MarketingObjective ----------------------------------------------------

MarketingObjective::MarketingObjective(
    std::vector<std::shared_ptr<const RRSetCollection>> rr,
    std::vector<double> costs, std::optional<double> budget)
    : ValueOracle(rr.empty() ? 0
                             : static_cast<int>(costs.size()) *
                                   static_cast<int>(rr.size())),
      rr_(std::move(rr)),
      num_nodes_(static_cast<int>(costs.size())) {
  if (rr_.empty()) throw ContractViolation("marketing needs >= 1 product");
  for (const auto& z : rr_) {
    if (!z || z->num_nodes() != num_nodes_) {
      throw ContractViolation("RR-set collection does not match |V|");
    }
    if (z->num_sets() < 1) throw ContractViolation("empty RR-set collection");
  }
  double total_cost = 0.0;
  for (double c : costs) {
    if (!std::isfinite(c) || c < 0.0) {
      throw ContractViolation("node costs must be finite and >= 0");
    }
    total_cost += c;
  }
  budget_ = budget.value_or(static_cast<double>(rr_.size()) * total_cost);
  costs_ = std::make_shared<const std::vector<double>>(std::move(costs));
}

std::unique_ptr<ValueOracle> MarketingObjective::clone() const {
  return std::unique_ptr<ValueOracle>(new MarketingObjective(*this));
}

double MarketingObjective::value(const ElementSet& s) const {
  if (s.empty()) return 0.0;
  const int m = num_products();
  std::vector<ElementSet> per_product(static_cast<std::size_t>(m),
                                      ElementSet(num_nodes_));
  double spent = 0.0;
  s.for_each([&](Element e) {
    per_product[static_cast<std::size_t>(e % m)].insert(e / m);
    spent += (*costs_)[static_cast<std::size_t>(e / m)];
  });
  double spread = 0.0;
  for (int i = 0; i < m; ++i) {
    spread += rr_estimate(*rr_[static_cast<std::size_t>(i)],
                          per_product[static_cast<std::size_t>(i)]);
  }
  return spread + (budget_ - spent);
}

double MarketingObjective::gain_from(const ElementSet& base,
                                     double base_value, Element e) const {
  if (base.empty()) return value(with(base, e)) - base_value;
  const int m = num_products();
  const Node u = e / m;
  const int product = e % m;
  const RRSetCollection& z = *rr_[static_cast<std::size_t>(product)];
  long fresh = 0;
  for (int r : z.sets_containing(u)) {
    bool hit = false;
    for (Node v : z.set(r)) {
      if (base.contains(v * m + product)) {
        hit = true;
        break;
      }
    }
    if (!hit) ++fresh;
  }
  return static_cast<double>(num_nodes_) * static_cast<double>(fresh) /
             static_cast<double>(z.num_sets()) -
         (*costs_)[static_cast<std::size_t>(u)];
}

}  // namespace twinopt
