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
#include <memory>
#include <utility>
#include <vector>

#include "gtest/gtest.h"
#include "testing/reference.h"
#include "twinopt/certify.h"
#include "twinopt/constraints.h"
#include "twinopt/generators.h"
#include "twinopt/objectives.h"
#include "twinopt/rng.h"
#include "twinopt/solvers.h"

namespace twinopt {
namespace {

using testing::Mask;
using testing::to_mask;

struct Case {
  std::unique_ptr<ValueOracle> f;
  std::unique_ptr<IndependenceOracle> constraint;
  std::vector<std::vector<int>> parts;
  std::vector<int> caps;
  int p = 1;
};

// Cut on ER(n, 0.5) under one partition matroid (p = 1) or an intersection
// of p of them.
Case random_case(int n, int p, std::uint64_t seed) {
  Case c;
  c.p = p;
  auto g = std::make_shared<WeightedGraph>(assign_weights_uniform(
      gen_er(n, 0.5, derive_seed(seed, 1)), 0.0, 1.0, derive_seed(seed, 2)));
  c.f = std::make_unique<CutObjective>(g);
  std::vector<std::shared_ptr<const IndependenceOracle>> ms;
  Rng rng(derive_seed(seed, 3));
  for (int i = 0; i < p; ++i) {
    c.parts.push_back(assign_groups(n, 1 + static_cast<int>(rng.below(3)),
                                    derive_seed(seed, 10 + static_cast<std::uint64_t>(i))));
    c.caps.push_back(1 + static_cast<int>(rng.below(2)));
    ms.push_back(std::make_shared<PartitionMatroid>(c.parts.back(), c.caps.back()));
  }
  if (p == 1) {
    c.constraint = ms.front()->clone();
  } else {
    c.constraint = std::make_unique<IntersectionSystem>(ms);
  }
  return c;
}

bool naive_independent(const Case& c, Mask m) {
  for (std::size_t i = 0; i < c.parts.size(); ++i) {
    if (!testing::naive_partition_ok(c.parts[i], c.caps[i], m)) return false;
  }
  return true;
}

TEST(ClassifyTest, OptimumEqualToFirstSetMapsToItself) {
  Case c = random_case(8, 1, 1);
  const RunReport r = twin_greedy(*c.f, *c.constraint);
  ASSERT_FALSE(r.s1.empty());
  const ClassifiedOptimal cls = classify(r.log, r.s1, *c.constraint);
  EXPECT_TRUE((cls.o1_plus | cls.o1_minus) == r.s1);
  const PiMapping pi = build_pi(r.log, cls, *c.constraint, 1);
  r.s1.for_each([&](Element e) { EXPECT_EQ(pi.pi1[static_cast<std::size_t>(e)], e); });
  EXPECT_TRUE(check_pi_structure(r.log, cls, pi, *c.constraint).empty());
}

TEST(ClassifyTest, EmptyOptimumGivesEmptyMaps) {
  Case c = random_case(8, 1, 2);
  const RunReport r = twin_greedy(*c.f, *c.constraint);
  const ClassifiedOptimal cls = classify(r.log, ElementSet(8), *c.constraint);
  EXPECT_TRUE(cls.domain1().empty());
  EXPECT_TRUE(cls.domain2().empty());
  const PiMapping pi = build_pi(r.log, cls, *c.constraint, 1);
  for (Element x : pi.pi1) EXPECT_EQ(x, -1);
  for (Element x : pi.pi2) EXPECT_EQ(x, -1);
  EXPECT_EQ(pi.max_preimage(), 0);
}

TEST(ClassifyTest, MatchesReferenceOnRandomRuns) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Case c = random_case(8, 1 + static_cast<int>(seed % 2), seed);
    const RunReport r = seed % 3 == 0 ? twin_greedy_fast(*c.f, *c.constraint, 0.1)
                                      : twin_greedy(*c.f, *c.constraint);
    Rng rng(seed + 500);
    const Mask o = static_cast<Mask>(rng.below(256));
    std::vector<std::pair<int, Side>> seq;
    for (const Insertion& in : r.log.entries()) seq.emplace_back(in.element, in.side);
    const testing::RefClasses ref = testing::reference_classify(
        seq, o, [&](Mask m) { return naive_independent(c, m); });
    const ClassifiedOptimal got = classify(r.log, testing::to_set(8, o), *c.constraint);
    EXPECT_EQ(to_mask(got.o1_plus), ref.o1_plus);
    EXPECT_EQ(to_mask(got.o1_minus), ref.o1_minus);
    EXPECT_EQ(to_mask(got.o2_plus), ref.o2_plus);
    EXPECT_EQ(to_mask(got.o2_minus), ref.o2_minus);
    EXPECT_EQ(to_mask(got.o3), ref.o3);
    EXPECT_EQ(to_mask(got.o4), ref.o4);
    EXPECT_EQ(to_mask(got.o5), ref.o5);
    EXPECT_EQ(to_mask(got.o6), ref.o6);
  }
}

TEST(PiMappingTest, CoversDomainWithBoundedPreimages) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int p = 1 + static_cast<int>(seed % 3);
    Case c = random_case(4 + static_cast<int>(seed % 7), p, seed);
    const RunReport r = twin_greedy_fast(*c.f, *c.constraint, 0.1);
    const Solution opt = exact_max(*c.f, *c.constraint);
    const ClassifiedOptimal cls = classify(r.log, opt.set, *c.constraint);
    PiMapping pi;
    ASSERT_NO_THROW(pi = build_pi(r.log, cls, *c.constraint, p)) << seed;
    EXPECT_LE(pi.max_preimage(), p);
    cls.domain1().for_each([&](Element e) { EXPECT_GE(pi.pi1[static_cast<std::size_t>(e)], 0); });
    cls.domain2().for_each([&](Element e) { EXPECT_GE(pi.pi2[static_cast<std::size_t>(e)], 0); });
    EXPECT_TRUE(check_pi_structure(r.log, cls, pi, *c.constraint).empty()) << seed;
  }
}

TEST(GainBoundsTest, ExactVariantHoldsForTwinGreedy) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Case c = random_case(4 + static_cast<int>(seed % 7), 1, seed);
    const RunReport r = twin_greedy(*c.f, *c.constraint);
    const Solution opt = exact_max(*c.f, *c.constraint);
    const ClassifiedOptimal cls = classify(r.log, opt.set, *c.constraint);
    const PiMapping pi = build_pi(r.log, cls, *c.constraint, 1);
    const GainBounds b = check_gain_bounds(r.log, cls, pi, *c.f, Variant::kExact, 0.0, 0.0);
    EXPECT_TRUE(b.holds()) << seed;
    EXPECT_EQ(b.bounds.size(), 6u);
    EXPECT_EQ(b.residuals.size(), static_cast<std::size_t>(cls.o5.size() + cls.o6.size()));
  }
}

TEST(GainBoundsTest, ThresholdVariantHoldsForFastGreedy) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    Case c = random_case(4 + static_cast<int>(seed % 7), 1, seed);
    const RunReport r = twin_greedy_fast(*c.f, *c.constraint, 0.1);
    const Solution opt = exact_max(*c.f, *c.constraint);
    const ClassifiedOptimal cls = classify(r.log, opt.set, *c.constraint);
    const PiMapping pi = build_pi(r.log, cls, *c.constraint, 1);
    const double tau_min = r.parameters.count("tau_min") ? r.parameters.at("tau_min") : 0.0;
    const GainBounds b =
        check_gain_bounds(r.log, cls, pi, *c.f, Variant::kThreshold, 0.1, tau_min);
    EXPECT_TRUE(b.holds()) << seed;
  }
}

TEST(CertifyRunTest, FullCertificatesPassWithinBudget) {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int p = 1 + static_cast<int>(seed % 2);
    Case c = random_case(4 + static_cast<int>(seed % 7), p, seed);
    const Solution opt = exact_max(*c.f, *c.constraint);
    const double brute = testing::brute_max(
        c.f->ground_size(), [&](Mask m) { return c.f->evaluate(testing::to_set(c.f->ground_size(), m)); },
        [&](Mask m) { return naive_independent(c, m); }).value;
    ASSERT_NEAR(opt.value, brute, 1e-9);
    struct Mode {
      RunReport run;
      CertifyOptions options;
    };
    std::vector<Mode> modes;
    modes.push_back({twin_greedy_fast(*c.f, *c.constraint, 0.1),
                     CertifyOptions{Variant::kThreshold, 0.1, p, kDefaultTolerance}});
    modes.push_back({twin_greedy(*c.f, *c.constraint),
                     CertifyOptions{Variant::kExact, 0.0, p, kDefaultTolerance}});
    for (const Mode& m : modes) {
      const auto fresh = c.f->clone();
      const Certificate cert = certify_run(m.run, *fresh, *c.constraint, opt.set, opt.value, m.options);
      EXPECT_TRUE(cert.passed()) << seed << " " << m.run.algorithm << " " << cert.pi_error;
      EXPECT_LE(cert.value_queries, cert.query_budget);
      EXPECT_EQ(cert.value_queries, fresh->query_count());
      EXPECT_GE(cert.global.ratio, cert.global.ratio_floor);
    }
  }
}

TEST(GlobalBoundTest, Forms) {
  RunReport run;
  run.log = InsertionLog(2);
  run.s1 = ElementSet(2, {0});
  run.s2 = ElementSet(2, {1});
  run.f_s1 = 1.0;
  run.f_s2 = 1.0;
  settle_best(run);
  const GlobalBound twin = check_global_bound(run, 4.0, Variant::kExact, 0.0, 1);
  EXPECT_EQ(twin.form, "twin");
  EXPECT_DOUBLE_EQ(twin.bound.rhs, 4.0);
  EXPECT_TRUE(twin.holds());
  EXPECT_DOUBLE_EQ(twin.ratio, 0.25);
  EXPECT_FALSE(check_global_bound(run, 4.1, Variant::kExact, 0.0, 1).holds());

  const GlobalBound fast = check_global_bound(run, 4.0, Variant::kThreshold, 0.1, 2);
  EXPECT_EQ(fast.form, "threshold");
  EXPECT_NEAR(fast.bound.rhs, (1 + 1.1 * 2) * 2 + 0.2 * 4.0, 1e-12);
  EXPECT_NEAR(fast.ratio_floor, 1.0 / 6 - 0.1, 1e-12);

  run.s2 = ElementSet(2);
  run.f_s2 = 0.0;
  settle_best(run);
  EXPECT_EQ(check_global_bound(run, 1.0, Variant::kExact, 0.0, 1).form, "degenerate");
  EXPECT_FALSE(check_global_bound(run, 1.5, Variant::kExact, 0.0, 1).holds());
}

TEST(CertifyRunTest, DetectsNonGreedyRun) {
  ModularObjective f({3, 2, 1});
  UniformMatroid k1(3, 1);
  RunReport run;
  run.log = InsertionLog(3);
  run.algorithm = "twin";
  run.log.record(2, Side::kFirst, 1.0);
  run.s1 = ElementSet(3, {2});
  run.s2 = ElementSet(3);
  run.f_s1 = 1.0;
  run.f_s2 = 0.0;
  settle_best(run);
  const Certificate cert =
      certify_run(run, f, k1, ElementSet(3, {0}), 3.0, CertifyOptions{});
  EXPECT_FALSE(cert.passed());
  EXPECT_FALSE(cert.gains.holds());
  EXPECT_FALSE(cert.global.holds());
}

}  // namespace
}  // namespace twinopt
