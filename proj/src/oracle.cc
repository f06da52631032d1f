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

#include "twinopt/oracle.h"

#include <string>
#include <utility>

#include "twinopt/rng.h"

namespace twinopt {

ValueOracle::ValueOracle(int ground_size) : n_(ground_size) {
  if (ground_size < 0) throw ContractViolation("ground size must be >= 0");
}

void ValueOracle::check(const ElementSet& s) const {
  if (s.universe() != n_) {
    throw ContractViolation("set over universe " +
                            std::to_string(s.universe()) +
                            " passed to oracle over " + std::to_string(n_));
  }
}

double ValueOracle::evaluate(const ElementSet& s) const {
  check(s);
  ++queries_;
  return value(s);
}

double ValueOracle::gain(const ElementSet& base, double base_value,
                         Element e) const {
  check(base);
  if (e < 0 || e >= n_) {
    throw ContractViolation("element " + std::to_string(e) + " out of range");
  }
  ++queries_;
  return gain_from(base, base_value, e);
}

double ValueOracle::gain_from(const ElementSet& base, double base_value,
                              Element e) const {
  return value(with(base, e)) - base_value;
}

double marginal_gain(const ValueOracle& oracle, double base_value,
                     const ElementSet& base, Element e) {
  if (base.contains(e)) {
    throw ContractViolation("marginal gain of element " + std::to_string(e) +
                            " already in the base set");
  }
  return oracle.gain(base, base_value, e);
}

// ---------------------------------------------------------------------------

class IndependenceOracle::RecheckState : public IndependenceOracle::State {
 public:
  explicit RecheckState(const IndependenceOracle& oracle)
      : oracle_(&oracle), members_(oracle.ground_size()) {}

  bool fits(Element e) const override {
    return oracle_->independent(with(members_, e));
  }
  void add(Element e) override { members_.insert(e); }
  std::unique_ptr<State> copy() const override {
    return std::make_unique<RecheckState>(*this);
  }

 private:
  const IndependenceOracle* oracle_;
  ElementSet members_;
};

IndependenceOracle::IndependenceOracle(int ground_size) : n_(ground_size) {
  if (ground_size < 0) throw ContractViolation("ground size must be >= 0");
}

void IndependenceOracle::check(const ElementSet& s) const {
  if (s.universe() != n_) {
    throw ContractViolation("set over universe " +
                            std::to_string(s.universe()) +
                            " passed to constraint over " +
                            std::to_string(n_));
  }
}

bool IndependenceOracle::is_independent(const ElementSet& s) const {
  check(s);
  ++checks_;
  return independent(s);
}

std::unique_ptr<IndependenceOracle::State> IndependenceOracle::start_state()
    const {
  return std::make_unique<RecheckState>(*this);
}

IndependentSetBuilder IndependenceOracle::builder() const {
  return IndependentSetBuilder(*this, start_state());
}

IndependentSetBuilder IndependenceOracle::builder(
    const ElementSet& start) const {
  check(start);
  IndependentSetBuilder b = builder();
  start.for_each([&](Element e) { b.add(e); });
  return b;
}

// ---------------------------------------------------------------------------

IndependentSetBuilder::IndependentSetBuilder(
    const IndependenceOracle& oracle,
    std::unique_ptr<IndependenceOracle::State> state)
    : oracle_(&oracle),
      state_(std::move(state)),
      members_(oracle.ground_size()) {}

IndependentSetBuilder::IndependentSetBuilder(const IndependentSetBuilder& other)
    : oracle_(other.oracle_),
      state_(other.state_->copy()),
      members_(other.members_) {}

IndependentSetBuilder& IndependentSetBuilder::operator=(
    const IndependentSetBuilder& other) {
  if (this != &other) {
    oracle_ = other.oracle_;
    state_ = other.state_->copy();
    members_ = other.members_;
  }
  return *this;
}

bool IndependentSetBuilder::can_add(Element e) const {
  if (e < 0 || e >= members_.universe()) {
    throw ContractViolation("element " + std::to_string(e) + " out of range");
  }
  ++oracle_->checks_;
  if (members_.contains(e)) return false;
  return state_->fits(e);
}

void IndependentSetBuilder::add(Element e) {
  if (members_.contains(e) || !state_->fits(e)) {
    throw ContractViolation("adding element " + std::to_string(e) +
                            " breaks independence");
  }
  members_.insert(e);
  state_->add(e);
}

// ---------------------------------------------------------------------------

namespace {

ElementSet random_subset(int n, Rng& rng, double density) {
  ElementSet s(n);
  for (Element e = 0; e < n; ++e) {
    if (rng.bernoulli(density)) s.insert(e);
  }
  return s;
}

}  // namespace

SubmodularityResult submodularity_check(const ValueOracle& oracle,
                                        const GroundSet& ground, int trials,
                                        std::uint64_t seed, double tolerance) {
  const int n = ground.size();
  if (n != oracle.ground_size()) {
    throw ContractViolation("ground set does not match the oracle");
  }
  Rng rng(seed);
  SubmodularityResult result;
  for (int t = 0; t < trials; ++t) {
    ++result.trials;
    const bool empty_x = rng.below(4) == 0;

    // Partition form.
    {
      ElementSet y = random_subset(n, rng, rng.uniform());
      ElementSet x(n);
      if (!empty_x) {
        const double keep = rng.uniform();
        y.for_each([&](Element e) {
          if (rng.bernoulli(keep)) x.insert(e);
        });
      }
      const ElementSet rest = y - x;
      const int t_parts = 1 + static_cast<int>(rng.below(
                                  static_cast<std::uint64_t>(rest.size()) + 1));
      std::vector<ElementSet> parts(static_cast<std::size_t>(t_parts),
                                    ElementSet(n));
      rest.for_each([&](Element e) {
        parts[rng.below(static_cast<std::uint64_t>(t_parts))].insert(e);
      });
      const double fx = oracle.evaluate(x);
      const double lhs = oracle.evaluate(y) - fx;
      double rhs = 0.0;
      for (const ElementSet& z : parts) {
        if (!z.empty()) rhs += oracle.evaluate(x | z) - fx;
      }
      if (lhs > rhs + tolerance) {
        result.holds = false;
        result.witness = SubmodularityWitness{"partition", x, y, parts, lhs,
                                              rhs};
        return result;
      }
    }

    // Lattice form.
    {
      ElementSet a = empty_x ? ElementSet(n)
                             : random_subset(n, rng, rng.uniform());
      ElementSet b = random_subset(n, rng, rng.uniform());
      const double lhs = oracle.evaluate(a) + oracle.evaluate(b);
      const double rhs = oracle.evaluate(a | b) + oracle.evaluate(a & b);
      if (lhs + tolerance < rhs) {
        result.holds = false;
        result.witness = SubmodularityWitness{"lattice", a, b, {}, lhs, rhs};
        return result;
      }
    }
  }
  return result;
}

}  // namespace twinopt
