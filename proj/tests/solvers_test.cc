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
#include <cmath>
#include <memory>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "testing/reference.h"
#include "twinopt/constraints.h"
#include "twinopt/generators.h"
#include "twinopt/objectives.h"
#include "twinopt/rng.h"
#include "twinopt/solvers.h"

namespace twinopt {
namespace {

using testing::Mask;

struct Instance {
  std::shared_ptr<WeightedGraph> graph;
  std::unique_ptr<ValueOracle> f;
  std::unique_ptr<IndependenceOracle> constraint;
  std::vector<int> part;
  int cap = 0;
};

// Weighted cut on ER(n, 0.5) under a random partition matroid.
Instance random_cut_instance(int n, std::uint64_t seed) {
  Instance inst;
  inst.graph = std::make_shared<WeightedGraph>(assign_weights_uniform(
      gen_er(n, 0.5, derive_seed(seed, 1)), 0.0, 1.0, derive_seed(seed, 2)));
  inst.f = std::make_unique<CutObjective>(inst.graph);
  Rng rng(derive_seed(seed, 3));
  const int groups = 1 + static_cast<int>(rng.below(3));
  inst.cap = 1 + static_cast<int>(rng.below(3));
  inst.part = assign_groups(n, groups, derive_seed(seed, 4));
  inst.constraint = std::make_unique<PartitionMatroid>(inst.part, inst.cap);
  return inst;
}

double brute_opt(const Instance& inst) {
  const int n = inst.f->ground_size();
  auto value = [&](Mask m) { return testing::naive_cut(*inst.graph, m); };
  auto indep = [&](Mask m) { return testing::naive_partition_ok(inst.part, inst.cap, m); };
  return testing::brute_max(n, value, indep).value;
}

void expect_well_formed(const RunReport& r, const ValueOracle& f,
                        const IndependenceOracle& constraint) {
  const auto fresh_f = f.clone();
  const auto fresh_c = constraint.clone();
  EXPECT_TRUE((r.s1 & r.s2).empty());
  EXPECT_TRUE(fresh_c->is_independent(r.s1));
  EXPECT_TRUE(fresh_c->is_independent(r.s2));
  EXPECT_NEAR(r.f_s1, fresh_f->evaluate(r.s1), 1e-9);
  EXPECT_NEAR(r.f_s2, fresh_f->evaluate(r.s2), 1e-9);
  EXPECT_DOUBLE_EQ(r.f_star, std::max(r.f_s1, r.f_s2));
  EXPECT_TRUE(r.s_star == (r.f_s1 >= r.f_s2 ? r.s1 : r.s2));
  const auto [s1, s2] = r.log.replay();
  EXPECT_TRUE(s1 == r.s1);
  EXPECT_TRUE(s2 == r.s2);
}

TEST(TwinGreedyTest, ModularSplitsTopTwo) {
  ModularObjective f({3, 2, 1});
  UniformMatroid k1(3, 1);
  for (const RunReport& r : {twin_greedy(f, k1), twin_greedy_fast(f, k1, 0.1)}) {
    EXPECT_TRUE(r.s1 == ElementSet(3, {0})) << r.algorithm;
    EXPECT_TRUE(r.s2 == ElementSet(3, {1})) << r.algorithm;
    EXPECT_DOUBLE_EQ(r.f_star, 3.0);
  }
}

TEST(TwinGreedyTest, AllNegativeGivesEmpty) {
  ModularObjective f({-1, -2, -0.5, -4});
  UniformMatroid k2(4, 2);
  for (const std::string& name : solver_names()) {
    const RunReport r = solve(name, f, k2, SolverParams{0.1, 0.5, 1});
    EXPECT_TRUE(r.s_star.empty()) << name;
    EXPECT_DOUBLE_EQ(r.f_star, 0.0) << name;
  }
  f.reset_count();
  const RunReport fast = twin_greedy_fast(f, k2, 0.1);
  EXPECT_EQ(fast.value_queries, 4 + 1);
}

TEST(TwinGreedyTest, LogGainsAreTrueMarginals) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = random_cut_instance(10, seed);
    const RunReport r = twin_greedy(*inst.f, *inst.constraint);
    expect_well_formed(r, *inst.f, *inst.constraint);
    const auto fresh = inst.f->clone();
    for (const Insertion& in : r.log.entries()) {
      const ElementSet pre = r.log.pre(in.element, in.side);
      const double g = fresh->evaluate(with(pre, in.element)) - fresh->evaluate(pre);
      EXPECT_NEAR(in.gain, g, 1e-9);
      EXPECT_GT(in.gain, 0.0);
      EXPECT_FALSE(in.threshold.has_value());
    }
  }
}

TEST(TwinGreedyFastTest, ThresholdsAreGeometricAndGainsClearThem) {
  const double eps = 0.2;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Instance inst = random_cut_instance(10, seed);
    const RunReport r = twin_greedy_fast(*inst.f, *inst.constraint, eps);
    expect_well_formed(r, *inst.f, *inst.constraint);
    const double tau_max = r.parameters.at("tau_max");
    const auto fresh = inst.f->clone();
    double last = tau_max;
    for (const Insertion& in : r.log.entries()) {
      ASSERT_TRUE(in.threshold.has_value());
      const double tau = *in.threshold;
      EXPECT_LE(tau, last);
      last = tau;
      const double k = std::log(tau_max / tau) / std::log(1 + eps);
      EXPECT_NEAR(k, std::round(k), 1e-6);
      EXPECT_GE(in.gain, tau - 1e-12);
      const ElementSet pre = r.log.pre(in.element, in.side);
      EXPECT_NEAR(in.gain, fresh->evaluate(with(pre, in.element)) - fresh->evaluate(pre), 1e-9);
    }
    EXPECT_GT(r.parameters.at("tau_min"),
              eps * tau_max / (r.parameters.at("rank") * (1 + eps)) - 1e-12);
  }
}

TEST(TwinGreedyFastTest, RejectsEpsilonOutsideUnitInterval) {
  ModularObjective f({1, 2});
  UniformMatroid k1(2, 1);
  for (double eps : {0.0, 1.0, -0.1, 1.5, std::nan("")}) {
    EXPECT_THROW(twin_greedy_fast(f, k1, eps), ContractViolation) << eps;
  }
  EXPECT_THROW(sample_greedy(f, k1, 0.0, 1), ContractViolation);
  EXPECT_THROW(solve("nope", f, k1, {}), ContractViolation);
  EXPECT_THROW(twin_greedy(f, UniformMatroid(3, 1)), ContractViolation);
}

TEST(SolverAccountingTest, CountersMatchOraclesAndBudgets) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = random_cut_instance(12, seed);
    const int n = 12;
    for (const std::string& name : solver_names()) {
      inst.f->reset_count();
      inst.constraint->reset_count();
      const RunReport r = solve(name, *inst.f, *inst.constraint, SolverParams{0.1, 0.5, seed});
      EXPECT_EQ(r.value_queries, inst.f->query_count()) << name;
      EXPECT_EQ(r.independence_checks, inst.constraint->check_count()) << name;
      if (name == "twin") {
        const int k = r.s1.size() + r.s2.size();
        EXPECT_LE(r.value_queries, twin_greedy_query_budget(n, k));
      }
      if (name == "twinfast") {
        EXPECT_LE(r.value_queries,
                  twin_greedy_fast_query_budget(n, rank_upper_bound(*inst.constraint), 0.1));
      }
    }
  }
}

TEST(SolverBudgetTest, FastBudgetFormula) {
  // n + 2n(ceil(log_{1.1}(1.1 * 4 / 0.1)) + 1) with n = 10, r = 4.
  const double passes = std::ceil(std::log(1.1 * 4 / 0.1) / std::log(1.1)) + 1;
  EXPECT_DOUBLE_EQ(twin_greedy_fast_query_budget(10, 4, 0.1), 10 + 20 * passes);
  EXPECT_DOUBLE_EQ(twin_greedy_query_budget(10, 3), 2 * 10 * 4 + 10);
  EXPECT_GT(twin_greedy_fast_query_budget(100, 10, 0.05),
            twin_greedy_fast_query_budget(100, 10, 0.1));
}

TEST(ExactTest, ModularPicksTopTwo) {
  ModularObjective f({3, 2, 1});
  const Solution s = exact_max(f, UniformMatroid(3, 2));
  EXPECT_TRUE(s.set == ElementSet(3, {0, 1}));
  EXPECT_DOUBLE_EQ(s.value, 5.0);
}

TEST(ExactTest, LexicographicallySmallestOptimum) {
  ModularObjective f({1, 1, 1});
  EXPECT_TRUE(exact_max(f, UniformMatroid(3, 1)).set == ElementSet(3, {0}));
}

TEST(ExactTest, MatchesBruteForce) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    Instance inst = random_cut_instance(n, seed);
    const Solution s = exact_max(*inst.f, *inst.constraint);
    EXPECT_NEAR(s.value, brute_opt(inst), 1e-9) << seed;
    EXPECT_TRUE(inst.constraint->is_independent(s.set));
  }
}

TEST(ClassicGreedyTest, LeavesSecondSetEmpty) {
  Instance inst = random_cut_instance(10, 3);
  const RunReport r = classic_greedy(*inst.f, *inst.constraint);
  expect_well_formed(r, *inst.f, *inst.constraint);
  EXPECT_TRUE(r.s2.empty());
}

TEST(SampleGreedyTest, FullSampleEqualsGreedy) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Instance inst = random_cut_instance(10, seed);
    const RunReport g = classic_greedy(*inst.f, *inst.constraint);
    const RunReport s = sample_greedy(*inst.f, *inst.constraint, 1.0, seed);
    EXPECT_TRUE(g.s1 == s.s1);
    EXPECT_DOUBLE_EQ(g.f_star, s.f_star);
    EXPECT_EQ(s.parameters.at("sample_size"), 10);
  }
}

TEST(SampleGreedyTest, EmptySampleGivesEmptySet) {
  Instance inst = random_cut_instance(10, 4);
  const RunReport r = sample_greedy(*inst.f, *inst.constraint, 1e-12, 5);
  EXPECT_EQ(r.parameters.at("sample_size"), 0);
  EXPECT_TRUE(r.s_star.empty());
  EXPECT_DOUBLE_EQ(r.f_star, 0.0);
}

TEST(SampleGreedyTest, AverageClearsQuarterOfOptimum) {
  for (std::uint64_t inst_seed = 1; inst_seed <= 5; ++inst_seed) {
    Instance inst = random_cut_instance(10, inst_seed);
    const double opt = brute_opt(inst);
    double sum = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
      sum += sample_greedy(*inst.f, *inst.constraint, 0.5, seed).f_star;
    }
    EXPECT_GE(sum / 200, 0.25 * opt);
  }
}

TEST(SampleGreedyTest, SeedDeterminesResult) {
  Instance inst = random_cut_instance(12, 6);
  const RunReport a = sample_greedy(*inst.f, *inst.constraint, 0.5, 77);
  const RunReport b = sample_greedy(*inst.f, *inst.constraint, 0.5, 77);
  EXPECT_TRUE(a.s1 == b.s1);
  EXPECT_EQ(a.seed, b.seed);
  EXPECT_EQ(a.rng, Rng::kAlgorithm);
}

TEST(ApproximationTest, TwinAndFastAgainstBruteForce) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = random_cut_instance(4 + static_cast<int>(seed % 8), seed);
    const double opt = brute_opt(inst);
    EXPECT_GE(twin_greedy(*inst.f, *inst.constraint).f_star, 0.25 * opt - 1e-9);
    EXPECT_GE(twin_greedy_fast(*inst.f, *inst.constraint, 0.1).f_star,
              (0.25 - 0.1) * opt - 1e-9);
  }
}

TEST(ApproximationTest, MonotoneHalf) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Rng rng(seed);
    const int n = 8, items = 12;
    std::vector<std::vector<int>> covers(n);
    for (auto& c : covers) {
      for (int i = 0; i < items; ++i) {
        if (rng.bernoulli(0.3)) c.push_back(i);
      }
    }
    const std::vector<double> weights = uniform_values(items, 0.0, 1.0, seed + 1000);
    CoverageObjective f(covers, weights);
    const std::vector<int> part = assign_groups(n, 2, seed + 2000);
    PartitionMatroid m(part, 2);
    // Coverage by plain union.
    auto value = [&](Mask s) {
      std::vector<char> hit(items, 0);
      for (int e = 0; e < n; ++e) {
        if (s & testing::bit(e)) {
          for (int i : covers[static_cast<std::size_t>(e)]) hit[static_cast<std::size_t>(i)] = 1;
        }
      }
      double total = 0;
      for (int i = 0; i < items; ++i) total += hit[static_cast<std::size_t>(i)] ? weights[static_cast<std::size_t>(i)] : 0.0;
      return total;
    };
    auto indep = [&](Mask s) { return testing::naive_partition_ok(part, 2, s); };
    const double opt = testing::brute_max(n, value, indep).value;
    EXPECT_GE(twin_greedy(f, m).f_star, 0.5 * opt - 1e-9) << seed;
  }
}

TEST(DeterminismTest, RepeatedRunsAgree) {
  Instance inst = random_cut_instance(14, 9);
  for (const char* name : {"twin", "twinfast", "greedy"}) {
    const RunReport a = solve(name, *inst.f, *inst.constraint, {});
    const RunReport b = solve(name, *inst.f, *inst.constraint, {});
    ASSERT_EQ(a.log.size(), b.log.size());
    for (std::size_t i = 0; i < a.log.size(); ++i) {
      EXPECT_EQ(a.log.entries()[i].element, b.log.entries()[i].element);
      EXPECT_EQ(a.log.entries()[i].side, b.log.entries()[i].side);
      EXPECT_EQ(a.log.entries()[i].gain, b.log.entries()[i].gain);
    }
    EXPECT_EQ(a.value_queries, b.value_queries);
  }
}

TEST(PSystemTest, FastRespectsIntersectionBound) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 9;
    auto graph = std::make_shared<WeightedGraph>(assign_weights_uniform(
        gen_er(n, 0.5, seed), 0.0, 1.0, seed + 1));
    CutObjective f(graph);
    const auto pa = assign_groups(n, 2, seed + 2);
    const auto pb = assign_groups(n, 3, seed + 3);
    IntersectionSystem sys({std::make_shared<PartitionMatroid>(pa, 2),
                            std::make_shared<PartitionMatroid>(pb, 1)});
    auto value = [&](Mask s) { return testing::naive_cut(*graph, s); };
    auto indep = [&](Mask s) {
      return testing::naive_partition_ok(pa, 2, s) && testing::naive_partition_ok(pb, 1, s);
    };
    const double opt = testing::brute_max(n, value, indep).value;
    const RunReport r = twin_greedy_fast(f, sys, 0.1);
    expect_well_formed(r, f, sys);
    EXPECT_GE(r.f_star, (1.0 / 6 - 0.1) * opt - 1e-9);
  }
}

}  // namespace
}  // namespace twinopt
