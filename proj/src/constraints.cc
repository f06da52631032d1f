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

#include "twinopt/constraints.h"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "twinopt/rng.h"

namespace twinopt {

namespace {

class CountingState : public IndependenceOracle::State {
 public:
  // Tracks per-group counts: element e belongs to group group_of(e), each
  // group holds at most group_cap, and the total is at most total_cap.
  CountingState(std::shared_ptr<const std::vector<int>> group_of,
                int num_groups, int group_cap, int total_cap)
      : group_of_(std::move(group_of)),
        counts_(static_cast<std::size_t>(num_groups), 0),
        group_cap_(group_cap),
        total_cap_(total_cap) {}

  bool fits(Element e) const override {
    if (total_ >= total_cap_) return false;
    if (!group_of_) return true;
    return counts_[static_cast<std::size_t>(
               (*group_of_)[static_cast<std::size_t>(e)])] < group_cap_;
  }
  void add(Element e) override {
    ++total_;
    if (group_of_) {
      ++counts_[static_cast<std::size_t>(
          (*group_of_)[static_cast<std::size_t>(e)])];
    }
  }
  std::unique_ptr<State> copy() const override {
    return std::make_unique<CountingState>(*this);
  }

 private:
  std::shared_ptr<const std::vector<int>> group_of_;
  std::vector<int> counts_;
  int group_cap_;
  int total_cap_;
  int total_ = 0;
};

constexpr int kNoCap = std::numeric_limits<int>::max();

}  // namespace

// --- UniformMatroid --------------------------------------------------------

UniformMatroid::UniformMatroid(int n, int k) : IndependenceOracle(n), k_(k) {
  if (k < 0) throw ContractViolation("uniform matroid cap must be >= 0");
}

bool UniformMatroid::independent(const ElementSet& s) const {
  return s.size() <= k_;
}

std::string UniformMatroid::describe() const {
  return "uniform(n=" + std::to_string(ground_size()) +
         ",k=" + std::to_string(k_) + ")";
}

std::unique_ptr<IndependenceOracle> UniformMatroid::clone() const {
  return std::make_unique<UniformMatroid>(ground_size(), k_);
}

std::unique_ptr<IndependenceOracle::State> UniformMatroid::start_state()
    const {
  return std::make_unique<CountingState>(nullptr, 0, kNoCap, k_);
}

// --- PartitionMatroid ------------------------------------------------------

PartitionMatroid::PartitionMatroid(std::vector<int> part_of, int k)
    : IndependenceOracle(static_cast<int>(part_of.size())), k_(k) {
  if (k < 0) throw ContractViolation("partition cap must be >= 0");
  int max_part = -1;
  for (int part : part_of) {
    if (part < 0) throw ContractViolation("part ids must be >= 0");
    max_part = std::max(max_part, part);
  }
  num_parts_ = max_part + 1;
  part_of_ = std::make_shared<const std::vector<int>>(std::move(part_of));
}

bool PartitionMatroid::independent(const ElementSet& s) const {
  std::vector<int> counts(static_cast<std::size_t>(num_parts_), 0);
  bool ok = true;
  s.for_each([&](Element e) {
    if (++counts[static_cast<std::size_t>(part_of(e))] > k_) ok = false;
  });
  return ok;
}

std::string PartitionMatroid::describe() const {
  return "partition(n=" + std::to_string(ground_size()) +
         ",h=" + std::to_string(num_parts_) + ",k=" + std::to_string(k_) +
         ")";
}

std::unique_ptr<IndependenceOracle> PartitionMatroid::clone() const {
  return std::make_unique<PartitionMatroid>(*part_of_, k_);
}

std::unique_ptr<IndependenceOracle::State> PartitionMatroid::start_state()
    const {
  return std::make_unique<CountingState>(part_of_, num_parts_, k_, kNoCap);
}

// --- SeedMatroid -----------------------------------------------------------

SeedMatroid::SeedMatroid(int num_nodes, int num_products, int k)
    : IndependenceOracle(num_nodes * num_products),
      num_nodes_(num_nodes),
      m_(num_products),
      k_(k) {
  if (num_nodes < 0 || num_products < 1 || k < 0) {
    throw ContractViolation("seed matroid needs |V| >= 0, m >= 1, k >= 0");
  }
  auto node_of_element =
      std::make_shared<std::vector<int>>(static_cast<std::size_t>(ground_size()));
  for (Element e = 0; e < ground_size(); ++e) {
    (*node_of_element)[static_cast<std::size_t>(e)] = node_of(e);
  }
  node_of_element_ = std::move(node_of_element);
}

bool SeedMatroid::independent(const ElementSet& s) const {
  if (s.size() > k_) return false;
  std::vector<char> used(static_cast<std::size_t>(num_nodes_), 0);
  bool ok = true;
  s.for_each([&](Element e) {
    char& slot = used[static_cast<std::size_t>(node_of(e))];
    if (slot) ok = false;
    slot = 1;
  });
  return ok;
}

std::string SeedMatroid::describe() const {
  return "seed(V=" + std::to_string(num_nodes_) +
         ",m=" + std::to_string(m_) + ",k=" + std::to_string(k_) + ")";
}

std::unique_ptr<IndependenceOracle> SeedMatroid::clone() const {
  return std::make_unique<SeedMatroid>(num_nodes_, m_, k_);
}

std::unique_ptr<IndependenceOracle::State> SeedMatroid::start_state() const {
  return std::make_unique<CountingState>(node_of_element_, num_nodes_, 1, k_);
}

// --- IntersectionSystem ----------------------------------------------------

namespace {

class IntersectionState : public IndependenceOracle::State {
 public:
  explicit IntersectionState(
      std::vector<std::unique_ptr<IndependenceOracle::State>> parts)
      : parts_(std::move(parts)) {}

  bool fits(Element e) const override {
    return std::all_of(parts_.begin(), parts_.end(),
                       [e](const auto& part) { return part->fits(e); });
  }
  void add(Element e) override {
    for (auto& part : parts_) part->add(e);
  }
  std::unique_ptr<State> copy() const override {
    std::vector<std::unique_ptr<IndependenceOracle::State>> parts;
    parts.reserve(parts_.size());
    for (const auto& part : parts_) parts.push_back(part->copy());
    return std::make_unique<IntersectionState>(std::move(parts));
  }

 private:
  std::vector<std::unique_ptr<IndependenceOracle::State>> parts_;
};

}  // namespace

IntersectionSystem::IntersectionSystem(
    std::vector<std::shared_ptr<const IndependenceOracle>> constituents)
    : IndependenceOracle(constituents.empty()
                             ? 0
                             : constituents.front()->ground_size()),
      constituents_(std::move(constituents)) {
  if (constituents_.empty()) {
    throw ContractViolation("intersection needs at least one constituent");
  }
  for (const auto& c : constituents_) {
    if (!c || c->ground_size() != ground_size()) {
      throw ContractViolation("intersection constituents differ in ground set");
    }
  }
}

bool IntersectionSystem::independent(const ElementSet& s) const {
  // Insert members one by one; for hereditary constituents a set is
  // independent iff every prefix fits.
  for (const auto& c : constituents_) {
    auto state = c->start_state();
    bool ok = true;
    s.for_each([&](Element e) {
      if (!ok) return;
      if (!state->fits(e)) {
        ok = false;
        return;
      }
      state->add(e);
    });
    if (!ok) return false;
  }
  return true;
}

std::string IntersectionSystem::describe() const {
  std::string out = "intersection(";
  for (std::size_t i = 0; i < constituents_.size(); ++i) {
    if (i) out += ";";
    out += constituents_[i]->describe();
  }
  return out + ")";
}

std::unique_ptr<IndependenceOracle> IntersectionSystem::clone() const {
  return std::make_unique<IntersectionSystem>(constituents_);
}

std::unique_ptr<IndependenceOracle::State> IntersectionSystem::start_state()
    const {
  std::vector<std::unique_ptr<State>> parts;
  parts.reserve(constituents_.size());
  for (const auto& c : constituents_) parts.push_back(c->start_state());
  return std::make_unique<IntersectionState>(std::move(parts));
}

// --- rank / verify_matroid -------------------------------------------------

int rank(const IndependenceOracle& constraint) {
  IndependentSetBuilder base = constraint.builder();
  for (Element e = 0; e < constraint.ground_size(); ++e) {
    if (base.can_add(e)) base.add(e);
  }
  return base.members().size();
}

int rank_upper_bound(const IndependenceOracle& constraint) {
  if (const auto* meet = dynamic_cast<const IntersectionSystem*>(&constraint)) {
    int bound = meet->ground_size();
    for (const auto& c : meet->constituents()) {
      bound = std::min(bound, rank_upper_bound(*c));
    }
    return bound;
  }
  return rank(constraint);
}

namespace {

ElementSet from_mask(int n, std::uint32_t mask) {
  ElementSet s(n);
  for (int e = 0; e < n; ++e) {
    if (mask >> e & 1u) s.insert(e);
  }
  return s;
}

MatroidCheck verify_exhaustive(const IndependenceOracle& constraint) {
  const int n = constraint.ground_size();
  const std::uint32_t count = std::uint32_t{1} << n;
  std::vector<char> indep(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    indep[mask] = constraint.is_independent(from_mask(n, mask));
  }

  MatroidCheck result;
  if (!indep[0]) {
    result.is_matroid = false;
    result.failure = "hereditary";
    result.a = ElementSet(n);
    result.b = ElementSet(n);
    return result;
  }
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!indep[mask]) continue;
    for (int e = 0; e < n; ++e) {
      const std::uint32_t sub = mask & ~(std::uint32_t{1} << e);
      if (sub != mask && !indep[sub]) {
        result.is_matroid = false;
        result.failure = "hereditary";
        result.a = from_mask(n, sub);
        result.b = from_mask(n, mask);
        return result;
      }
    }
  }

  // largest[Y] = size of a largest independent subset of Y.
  std::vector<int> largest(count, 0);
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (indep[mask]) {
      largest[mask] = std::popcount(mask);
      continue;
    }
    for (int e = 0; e < n; ++e) {
      if (mask >> e & 1u) {
        largest[mask] = std::max(largest[mask],
                                 largest[mask & ~(std::uint32_t{1} << e)]);
      }
    }
  }

  // Exchange fails iff some independent A is maximal inside A u Bad(A), where
  // Bad(A) holds the elements that cannot extend A, while A u Bad(A) contains
  // a larger independent set.
  const std::uint32_t all = count - 1;
  for (std::uint32_t a = 0; a < count; ++a) {
    if (!indep[a]) continue;
    std::uint32_t blocked = 0;
    for (int e = 0; e < n; ++e) {
      const std::uint32_t bit = std::uint32_t{1} << e;
      if (!(a & bit) && !indep[a | bit]) blocked |= bit;
    }
    const std::uint32_t hull = (a | blocked) & all;
    if (largest[hull] <= std::popcount(a)) continue;
    std::uint32_t b = hull;
    while (!indep[b]) {
      for (int e = 0; e < n; ++e) {
        const std::uint32_t bit = std::uint32_t{1} << e;
        if ((b & bit) && largest[b & ~bit] == largest[b]) {
          b &= ~bit;
          break;
        }
      }
    }
    result.is_matroid = false;
    result.failure = "exchange";
    result.a = from_mask(n, a);
    result.b = from_mask(n, b);
    return result;
  }
  return result;
}

ElementSet random_independent(const IndependenceOracle& constraint, Rng& rng) {
  const int n = constraint.ground_size();
  std::vector<Element> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[static_cast<std::size_t>(i)],
              order[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  }
  const int target = static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
  IndependentSetBuilder b = constraint.builder();
  for (Element e : order) {
    if (b.members().size() >= target) break;
    if (b.can_add(e)) b.add(e);
  }
  return b.members();
}

MatroidCheck verify_sampled(const IndependenceOracle& constraint, int samples,
                            std::uint64_t seed) {
  const int n = constraint.ground_size();
  Rng rng(seed);
  MatroidCheck result;
  if (!constraint.is_independent(ElementSet(n))) {
    result.is_matroid = false;
    result.failure = "hereditary";
    result.a = ElementSet(n);
    result.b = ElementSet(n);
    return result;
  }
  for (int t = 0; t < samples; ++t) {
    const ElementSet b = random_independent(constraint, rng);
    ElementSet sub(n);
    b.for_each([&](Element e) {
      if (rng.bernoulli(0.5)) sub.insert(e);
    });
    if (!constraint.is_independent(sub)) {
      result.is_matroid = false;
      result.failure = "hereditary";
      result.a = sub;
      result.b = b;
      return result;
    }
    ElementSet a = random_independent(constraint, rng);
    ElementSet big = b;
    if (a.size() > big.size()) std::swap(a, big);
    if (a.size() == big.size()) continue;
    bool extends = false;
    (big - a).for_each([&](Element x) {
      if (!extends && constraint.is_independent(with(a, x))) extends = true;
    });
    if (!extends) {
      result.is_matroid = false;
      result.failure = "exchange";
      result.a = a;
      result.b = big;
      return result;
    }
  }
  return result;
}

}  // namespace

MatroidCheck verify_matroid(const IndependenceOracle& constraint,
                            bool exhaustive, int samples, std::uint64_t seed) {
  if (exhaustive) {
    if (constraint.ground_size() > 16) {
      throw ContractViolation("exhaustive matroid check requires n <= 16");
    }
    return verify_exhaustive(constraint);
  }
  return verify_sampled(constraint, samples, seed);
}

}  // namespace twinopt
