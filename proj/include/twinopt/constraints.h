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

#ifndef TWINOPT_CONSTRAINTS_H_
#define TWINOPT_CONSTRAINTS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinopt/element_set.h"
#include "twinopt/oracle.h"

namespace twinopt {

// S is independent iff |S| <= k.
class UniformMatroid : public IndependenceOracle {
 public:
  UniformMatroid(int n, int k);

  int cap() const { return k_; }

  std::string describe() const override;
  std::unique_ptr<IndependenceOracle> clone() const override;
  std::unique_ptr<State> start_state() const override;

 protected:
  bool independent(const ElementSet& s) const override;

 private:
  int k_;
};

// S is independent iff |S n V_i| <= k for every part V_i. The same cap k
// applies to all parts.
class PartitionMatroid : public IndependenceOracle {
 public:
  // part_of[e] in [0, h).
  PartitionMatroid(std::vector<int> part_of, int k);

  int num_parts() const { return num_parts_; }
  int cap() const { return k_; }
  int part_of(Element e) const { return (*part_of_)[static_cast<std::size_t>(e)]; }

  std::string describe() const override;
  std::unique_ptr<IndependenceOracle> clone() const override;
  std::unique_ptr<State> start_state() const override;

 protected:
  bool independent(const ElementSet& s) const override;

 private:
  std::shared_ptr<const std::vector<int>> part_of_;
  int num_parts_;
  int k_;
};

// Seed selection over V x [m] packed as u * m + i: at most k seeds overall
// and at most one product per node.
class SeedMatroid : public IndependenceOracle {
 public:
  SeedMatroid(int num_nodes, int num_products, int k);

  int num_nodes() const { return num_nodes_; }
  int num_products() const { return m_; }
  int cap() const { return k_; }
  Element id(int node, int product) const { return node * m_ + product; }
  int node_of(Element e) const { return e / m_; }
  int product_of(Element e) const { return e % m_; }

  std::string describe() const override;
  std::unique_ptr<IndependenceOracle> clone() const override;
  std::unique_ptr<State> start_state() const override;

 protected:
  bool independent(const ElementSet& s) const override;

 private:
  int num_nodes_;
  int m_;
  int k_;
  std::shared_ptr<const std::vector<int>> node_of_element_;
};

// Intersection of p >= 1 independence systems over one ground set. The
// intersection of p matroids is a p-set system.
class IntersectionSystem : public IndependenceOracle {
 public:
  explicit IntersectionSystem(
      std::vector<std::shared_ptr<const IndependenceOracle>> constituents);

  int p() const { return static_cast<int>(constituents_.size()); }
  const std::vector<std::shared_ptr<const IndependenceOracle>>& constituents()
      const {
    return constituents_;
  }

  std::string describe() const override;
  std::unique_ptr<IndependenceOracle> clone() const override;
  std::unique_ptr<State> start_state() const override;

 protected:
  bool independent(const ElementSet& s) const override;

 private:
  std::vector<std::shared_ptr<const IndependenceOracle>> constituents_;
};

// Size of the base found by one greedy pass in ascending id order. Equals the
// rank for matroids; for a p-set system it is within a factor p of every
// other base.
int rank(const IndependenceOracle& constraint);

// At least the size of every independent set: the smallest constituent
// rank for an IntersectionSystem, rank() otherwise.
int rank_upper_bound(const IndependenceOracle& constraint);

struct MatroidCheck {
  bool is_matroid = true;
  // "hereditary" or "exchange" when is_matroid is false.
  std::string failure;
  // Hereditary: a is a dependent subset of the independent b.
  // Exchange: |a| < |b| and no x in b \ a keeps a + x independent.
  std::optional<ElementSet> a;
  std::optional<ElementSet> b;
};

// Checks the hereditary and exchange axioms. Exhaustive mode covers all of
// 2^N (requires n <= 16); otherwise `samples` random pairs are tried.
MatroidCheck verify_matroid(const IndependenceOracle& constraint,
                            bool exhaustive, int samples = 1000,
                            std::uint64_t seed = 1);

}  // namespace twinopt

#endif  // TWINOPT_CONSTRAINTS_H_
