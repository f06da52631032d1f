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

#ifndef TWINOPT_ORACLE_H_
#define TWINOPT_ORACLE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twinopt/element_set.h"

namespace twinopt {

inline constexpr double kDefaultTolerance = 1e-9;

// Query-counted set function f: 2^N -> R.
//
// Every call to evaluate() or gain() is one query. Oracles cache nothing, so
// the counter reflects exactly what the calling algorithm asked for. The
// counter is the only mutable state; use clone() to give each concurrent run
// its own instance.
class ValueOracle {
 public:
  explicit ValueOracle(int ground_size);
  virtual ~ValueOracle() = default;

  int ground_size() const { return n_; }

  double evaluate(const ElementSet& s) const;

  // f(base + e) - base_value, where base_value == f(base) is supplied by the
  // caller. One query. Subclasses may compute it incrementally.
  double gain(const ElementSet& base, double base_value, Element e) const;

  std::int64_t query_count() const { return queries_; }
  void reset_count() { queries_ = 0; }

  virtual std::string name() const = 0;
  // Fresh instance over the same data with a zeroed counter.
  virtual std::unique_ptr<ValueOracle> clone() const = 0;

 protected:
  ValueOracle(const ValueOracle& other) : n_(other.n_) {}

  virtual double value(const ElementSet& s) const = 0;
  virtual double gain_from(const ElementSet& base, double base_value,
                           Element e) const;

 private:
  void check(const ElementSet& s) const;

  int n_;
  mutable std::int64_t queries_ = 0;
};

// f(e | base) with a cached base value. Throws ContractViolation if e is
// already in base.
double marginal_gain(const ValueOracle& oracle, double base_value,
                     const ElementSet& base, Element e);

class IndependentSetBuilder;

// Membership test for a hereditary family I of subsets of N.
class IndependenceOracle {
 public:
  // Uncounted incremental feasibility state for one growing set. Obtained via
  // start_state(); algorithms should go through IndependentSetBuilder, which
  // does the counting.
  class State {
   public:
    virtual ~State() = default;
    // Whether members + e is independent. e is not a member.
    virtual bool fits(Element e) const = 0;
    virtual void add(Element e) = 0;
    virtual std::unique_ptr<State> copy() const = 0;
  };

  explicit IndependenceOracle(int ground_size);
  virtual ~IndependenceOracle() = default;

  int ground_size() const { return n_; }

  bool is_independent(const ElementSet& s) const;

  // Builder starting from the empty set.
  IndependentSetBuilder builder() const;
  // Builder starting from `start`, which must be independent.
  IndependentSetBuilder builder(const ElementSet& start) const;

  std::int64_t check_count() const { return checks_; }
  void reset_count() { checks_ = 0; }

  virtual std::string describe() const = 0;
  virtual std::unique_ptr<IndependenceOracle> clone() const = 0;

  // Default state re-tests members + e from scratch; concrete matroids
  // override this with O(1) bookkeeping.
  virtual std::unique_ptr<State> start_state() const;

 protected:
  IndependenceOracle(const IndependenceOracle& other) : n_(other.n_) {}

  virtual bool independent(const ElementSet& s) const = 0;

 private:
  friend class IndependentSetBuilder;
  class RecheckState;

  void check(const ElementSet& s) const;

  int n_;
  mutable std::int64_t checks_ = 0;
};

// A growing independent set. can_add() costs one independence check on the
// owning oracle.
class IndependentSetBuilder {
 public:
  IndependentSetBuilder(const IndependentSetBuilder& other);
  IndependentSetBuilder& operator=(const IndependentSetBuilder& other);
  IndependentSetBuilder(IndependentSetBuilder&&) = default;
  IndependentSetBuilder& operator=(IndependentSetBuilder&&) = default;

  bool can_add(Element e) const;
  // Throws ContractViolation if members + e is not independent.
  void add(Element e);

  const ElementSet& members() const { return members_; }

 private:
  friend class IndependenceOracle;
  IndependentSetBuilder(const IndependenceOracle& oracle,
                        std::unique_ptr<IndependenceOracle::State> state);

  const IndependenceOracle* oracle_;
  std::unique_ptr<IndependenceOracle::State> state_;
  ElementSet members_;
};

struct SubmodularityWitness {
  // "partition": f(Y|X) > sum_j f(Z_j|X).
  // "lattice": f(X) + f(Y) < f(X u Y) + f(X n Y).
  std::string kind;
  ElementSet x;
  ElementSet y;
  std::vector<ElementSet> parts;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct SubmodularityResult {
  bool holds = true;
  int trials = 0;
  std::optional<SubmodularityWitness> witness;
};

// Randomized test of the two submodularity characterizations: for sampled
// X subset of Y and a random partition Z_1..Z_t of Y \ X,
// f(Y|X) <= sum_j f(Z_j|X); and for sampled pairs,
// f(X) + f(Y) >= f(X u Y) + f(X n Y). About a quarter of the trials use X = {}
// so that special-cased empty-set values are exercised. Stops at the first
// violation.
SubmodularityResult submodularity_check(const ValueOracle& oracle,
                                        const GroundSet& ground, int trials,
                                        std::uint64_t seed,
                                        double tolerance = kDefaultTolerance);

}  // namespace twinopt

#endif  // TWINOPT_ORACLE_H_
