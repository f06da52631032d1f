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
#include <algorithm>
#include <cmath>
#include <vector>

#include "gtest/gtest.h"
#include "testing/reference.h"
#include "twinopt/generators.h"
#include "twinopt/rng.h"

namespace twinopt {
namespace {

TEST(ErdosRenyiTest, ExtremeProbabilities) {
  EXPECT_EQ(gen_er(10, 0.0, 1).num_edges(), 0);
  EXPECT_EQ(gen_er(5, 1.0, 1).num_edges(), 10);
  EXPECT_EQ(gen_er(5, 1.0, 1, /*directed=*/true).num_edges(), 20);
  EXPECT_THROW(gen_er(5, 1.5, 1), ContractViolation);
}

TEST(ErdosRenyiTest, EdgeCountWithinFourSigma) {
  const int n = 200;
  const double p = 0.5;
  const double pairs = n * (n - 1) / 2.0;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  const WeightedGraph g = gen_er(n, p, 7);
  EXPECT_NEAR(g.num_edges(), pairs * p, 4 * sigma);
  for (const Edge& e : g.edges()) {
    EXPECT_LT(e.u, e.v);
    EXPECT_DOUBLE_EQ(e.weight, 1.0);
  }
}

TEST(ErdosRenyiTest, Deterministic) {
  const WeightedGraph a = gen_er(50, 0.2, 9);
  const WeightedGraph b = gen_er(50, 0.2, 9);
  ASSERT_EQ(a.num_edges(), b.num_edges());
  for (int i = 0; i < a.num_edges(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
  }
}

TEST(BarabasiAlbertTest, SeedCliqueOnly) {
  const WeightedGraph g = gen_ba(6, 6, 3, 1);
  EXPECT_EQ(g.num_edges(), 15);
}

TEST(BarabasiAlbertTest, EdgeCountAndSimpleGraph) {
  const int n = 100, m0 = 2, m = 2;
  const WeightedGraph g = gen_ba(n, m0, m, 3);
  EXPECT_EQ(g.num_edges(), m0 * (m0 - 1) / 2 + (n - m0) * m);
  std::vector<std::pair<Node, Node>> seen;
  for (const Edge& e : g.edges()) {
    EXPECT_NE(e.u, e.v);
    seen.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(seen.begin(), seen.end());
  EXPECT_EQ(std::adjacent_find(seen.begin(), seen.end()), seen.end());
  EXPECT_THROW(gen_ba(5, 2, 3, 1), ContractViolation);
}

TEST(BarabasiAlbertTest, HeavyTailedDegrees) {
  const int n = 2000;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const WeightedGraph g = gen_ba(n, 3, 2, seed);
    std::vector<int> degree(n, 0);
    for (const Edge& e : g.edges()) {
      ++degree[static_cast<std::size_t>(e.u)];
      ++degree[static_cast<std::size_t>(e.v)];
    }
    const int max_degree = *std::max_element(degree.begin(), degree.end());
    std::nth_element(degree.begin(), degree.begin() + n / 2, degree.end());
    EXPECT_GE(max_degree, 3 * degree[n / 2]) << "seed " << seed;
  }
}

TEST(WeightsTest, DegenerateRangeAndMean) {
  const WeightedGraph g = assign_weights_uniform(gen_er(60, 0.5, 1), 0.7, 0.7, 2);
  for (const Edge& e : g.edges()) EXPECT_DOUBLE_EQ(e.weight, 0.7);

  const WeightedGraph h = assign_weights_uniform(gen_er(200, 0.5, 1), 1.0, 3.0, 3);
  double sum = 0;
  for (const Edge& e : h.edges()) {
    EXPECT_GE(e.weight, 1.0);
    EXPECT_LE(e.weight, 3.0);
    sum += e.weight;
  }
  const double m = h.num_edges();
  EXPECT_NEAR(sum / m, 2.0, 4 * std::sqrt(4.0 / 12.0 / m));

  const WeightedGraph again = assign_weights_uniform(gen_er(200, 0.5, 1), 1.0, 3.0, 3);
  for (int i = 0; i < h.num_edges(); ++i) {
    EXPECT_EQ(h.edges()[i].weight, again.edges()[i].weight);
  }
}

TEST(GroupsTest, SizesAndDeterminism) {
  for (int g : assign_groups(50, 1, 4)) EXPECT_EQ(g, 0);
  const int n = 10000, h = 5;
  const std::vector<int> part = assign_groups(n, h, 5);
  std::vector<int> count(h, 0);
  for (int g : part) {
    ASSERT_GE(g, 0);
    ASSERT_LT(g, h);
    ++count[static_cast<std::size_t>(g)];
  }
  const double sigma = std::sqrt(n * (1.0 / h) * (1 - 1.0 / h));
  for (int c : count) EXPECT_NEAR(c, n / static_cast<double>(h), 4 * sigma);
  EXPECT_EQ(part, assign_groups(n, h, 5));
}

TEST(IndegreeProbabilitiesTest, InverseIndegree) {
  WeightedGraph g(4, /*directed=*/true);
  g.add_edge(0, 3);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  const WeightedGraph h = set_indegree_probabilities(g);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(h.edges()[i].prob, 1.0 / 3);
  EXPECT_DOUBLE_EQ(h.edges()[3].prob, 1.0);
}

TEST(RRSetsTest, EdgelessGraphGivesSingletons) {
  const RRSetCollection z = gen_rr_sets(WeightedGraph(7, true), 100, 1);
  EXPECT_EQ(z.num_sets(), 100);
  for (int i = 0; i < z.num_sets(); ++i) EXPECT_EQ(z.set(i).size(), 1u);
}

TEST(RRSetsTest, CertainPathReachesEveryAncestor) {
  WeightedGraph g(3, true);
  g.add_edge(0, 1, 1.0, 1.0);
  g.add_edge(1, 2, 1.0, 1.0);
  const RRSetCollection z = gen_rr_sets(g, 300, 2);
  for (int i = 0; i < z.num_sets(); ++i) {
    // Root r yields {0..r}; members come back sorted.
    const auto s = z.set(i);
    for (std::size_t j = 0; j < s.size(); ++j) ASSERT_EQ(s[j], static_cast<Node>(j));
  }
}

TEST(RRSetsTest, TwoNodeMembershipFrequency) {
  WeightedGraph g(2, true);
  g.add_edge(0, 1, 1.0, 0.5);
  const RRSetCollection z = gen_rr_sets(g, 100000, 3);
  int both = 0;
  for (int i = 0; i < z.num_sets(); ++i) both += z.set(i).size() == 2 ? 1 : 0;
  EXPECT_NEAR(both / 100000.0, 0.25, 0.01);
}

TEST(RRSetsTest, MembershipMatchesEnumeration) {
  const WeightedGraph g = assign_probs_uniform(gen_er(5, 0.4, 4, true), 0.1, 0.9, 5);
  ASSERT_LE(g.num_edges(), 20);
  const int count = 40000;
  const RRSetCollection z = gen_rr_sets(g, count, 6);
  for (Node x = 0; x < 5; ++x) {
    const double expected = testing::reference_rr_membership(g, x);
    const double observed = z.sets_containing(x).size() / static_cast<double>(count);
    const double sigma = std::sqrt(expected * (1 - expected) / count);
    EXPECT_NEAR(observed, expected, 3 * sigma + 1e-12) << "node " << x;
  }
}

TEST(RRSetsTest, RejectsUndirectedAndEmpty) {
  EXPECT_THROW(gen_rr_sets(WeightedGraph(3, false), 10, 1), ContractViolation);
  EXPECT_THROW(gen_rr_sets(WeightedGraph(3, true), 0, 1), ContractViolation);
}

TEST(ExactSpreadTest, SmallCases) {
  WeightedGraph g(2, true);
  g.add_edge(0, 1, 1.0, 0.3);
  EXPECT_DOUBLE_EQ(ic_exact_spread(g, ElementSet(2)), 0.0);
  EXPECT_NEAR(ic_exact_spread(g, ElementSet(2, {0})), 1.3, 1e-12);
  EXPECT_NEAR(ic_exact_spread(g, ElementSet(2, {1})), 1.0, 1e-12);
}

TEST(ExactSpreadTest, AgreesWithReferenceEnumeration) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    for (bool directed : {true, false}) {
      const WeightedGraph g =
          assign_probs_uniform(gen_er(6, 0.35, seed, directed), 0.0, 1.0, seed + 100);
      if (g.num_edges() > 14) continue;
      for (testing::Mask a = 0; a < 64; a += 5) {
        EXPECT_NEAR(ic_exact_spread(g, testing::to_set(6, a)),
                    testing::reference_spread(g, a), 1e-9);
      }
    }
  }
}

}  // namespace
}  // namespace twinopt
