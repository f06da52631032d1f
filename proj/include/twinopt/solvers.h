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

#ifndef TWINOPT_SOLVERS_H_
#define TWINOPT_SOLVERS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twinopt/element_set.h"
#include "twinopt/oracle.h"
#include "twinopt/run_report.h"

namespace twinopt {

// Ties are always broken toward side 1, then toward the lower element id, so
// every deterministic solver is bit-reproducible.
struct SolverParams {
  // Threshold decay for twin_greedy_fast; in (0, 1).
  double epsilon = 0.1;
  // Element sampling probability for sample_greedy; in (0, 1].
  double sample_prob = 0.5;
  std::uint64_t seed = 0;
};

// Grows disjoint S1, S2 from the empty set. Each round picks the feasible
// (side, element) pair with the largest marginal gain and stops once that
// gain is <= 0 or nothing fits. Returns the better of the two. A 1/4
// approximation for non-negative submodular f over a matroid, using O(nr)
// value queries.
//
// Gains toward a side are cached until that side changes, so a round costs
// one query per candidate of the side that just grew.
RunReport twin_greedy(const ValueOracle& f, const IndependenceOracle& constraint);

// Threshold version of twin_greedy. Starting from
// tau_max = max{f({e}) : {e} independent}, each pass scans the unselected
// elements in ascending id order and puts e on the side with the larger
// feasible gain if that gain is >= tau; tau then shrinks by (1 + epsilon)
// while tau > epsilon * tau_max / (r (1 + epsilon)), with
// r = rank_upper_bound(constraint).
// (1/4 - epsilon) over a matroid and (1/(2p+2) - epsilon) over a p-set
// system, with O((n / epsilon) log(r / epsilon)) queries.
//
// Throws ContractViolation unless 0 < epsilon < 1.
RunReport twin_greedy_fast(const ValueOracle& f,
                           const IndependenceOracle& constraint,
                           double epsilon);

// Single-set greedy: add the feasible element with the largest positive gain
// until none remains. S2 is left empty.
RunReport classic_greedy(const ValueOracle& f,
                         const IndependenceOracle& constraint);

// Keeps each element independently with probability q, then runs
// classic_greedy on the kept elements.
RunReport sample_greedy(const ValueOracle& f,
                        const IndependenceOracle& constraint, double q,
                        std::uint64_t seed);

struct Solution {
  ElementSet set;
  double value = 0.0;
  std::int64_t value_queries = 0;
};

// Best independent set by depth-first enumeration in lexicographic order,
// pruning at the first dependent set (valid because the family is
// hereditary). Among equal values the lexicographically smallest set wins.
// Requires n <= 20.
Solution exact_max(const ValueOracle& f, const IndependenceOracle& constraint);

// exact_max wrapped as a RunReport (S1 = optimum, S2 = {}).
RunReport exact_report(const ValueOracle& f,
                       const IndependenceOracle& constraint);

// Names: twin, twinfast, greedy, samplegreedy, exact.
RunReport solve(std::string_view algorithm, const ValueOracle& f,
                const IndependenceOracle& constraint,
                const SolverParams& params);

const std::vector<std::string>& solver_names();
bool is_randomized(std::string_view algorithm);

// Largest number of value queries twin_greedy_fast may issue:
// n + 2n (ceil(log_{1+eps}((1+eps) r / eps)) + 1).
double twin_greedy_fast_query_budget(int n, int r, double epsilon);

// Largest number of value queries twin_greedy may issue for final sizes
// |S1| + |S2| = k: 2n(k + 1) + n.
double twin_greedy_query_budget(int n, int k);

}  // namespace twinopt

#endif  // TWINOPT_SOLVERS_H_
