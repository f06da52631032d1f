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

// Certificates for twin-greedy runs on instances small enough to know the
// optimum O. Given a finished run, O is split into classes by how its
// elements relate to S1 and S2, the charging maps pi1: classes -> S1 and
// pi2: classes -> S2 are built by a backward sweep over the insertion order,
// and every inequality of the approximation argument is evaluated.

#ifndef TWINOPT_CERTIFY_H_
#define TWINOPT_CERTIFY_H_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinopt/element_set.h"
#include "twinopt/oracle.h"
#include "twinopt/run_report.h"

namespace twinopt {

// A broken guarantee: a bug in the solver, the constraint or the objective.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// kExact certifies twin_greedy; kThreshold certifies twin_greedy_fast and
// scales the four charged bounds by (1 + epsilon).
enum class Variant { kExact, kThreshold };

// With pre(e, S) the members of S inserted before e:
//   o1_plus  = {e in O n S1 : pre(e, S2) + e independent}, o1_minus the rest
//   o2_plus  = {e in O n S2 : pre(e, S1) + e independent}, o2_minus the rest
//   o3       = {e in O \ (S1 u S2) : S1 + e dependent}
//   o4       = {e in O \ (S1 u S2) : S2 + e dependent}
//   o5       = O \ (S1 u S2 u o3),  o6 = O \ (S1 u S2 u o4)
// S1 and S2 are the final sets.
struct ClassifiedOptimal {
  ElementSet o1_plus;
  ElementSet o1_minus;
  ElementSet o2_plus;
  ElementSet o2_minus;
  ElementSet o3;
  ElementSet o4;
  ElementSet o5;
  ElementSet o6;

  // Domains of pi1 and pi2.
  ElementSet domain1() const;
  ElementSet domain2() const;
};

ClassifiedOptimal classify(const InsertionLog& log, const ElementSet& o,
                           const IndependenceOracle& constraint);

struct PiMapping {
  int p = 1;
  // pi[e] is the image of e, or -1 outside the domain.
  std::vector<Element> pi1;
  std::vector<Element> pi2;
  // preimage[y] = |pi^{-1}(y)|.
  std::vector<int> preimage1;
  std::vector<int> preimage2;

  int max_preimage() const;
  // Number of targets in S1 u S2 by preimage size.
  std::map<int, int> preimage_histogram(const InsertionLog& log) const;
};

// Backward sweep over u_s, ..., u_1 (one side's insertion order), with
// L = domain. At step j, A_j holds the x in L \ {u_1..u_{j-1}} that keep
// {u_1..u_{j-1}, x} independent; D_j = A_j if |A_j| <= p, otherwise p of its
// smallest ids, with u_j forced in when it belongs to that side's identity
// classes. D_j maps to u_j and leaves L. For p = 1 this is the matroid
// construction with the smallest id chosen. Throws CertificationFailure if L
// is not empty at the end.
PiMapping build_pi(const InsertionLog& log, const ClassifiedOptimal& classes,
                   const IndependenceOracle& constraint, int p);

// Lists every violated structural property: pre(pi(e)) + e independent,
// preimages of size <= p, identity on o1 (pi1) and o2 (pi2), images on the
// right side. Empty when all hold.
std::vector<std::string> check_pi_structure(const InsertionLog& log,
                                            const ClassifiedOptimal& classes,
                                            const PiMapping& pi,
                                            const IndependenceOracle& constraint);

struct Inequality {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = true;
  double slack() const { return rhs - lhs; }
};

struct GainBounds {
  // f(S1) and f(S2), evaluated afresh.
  double f_s1 = 0.0;
  double f_s2 = 0.0;
  // The six charged bounds, in the order
  // O1+|S2, O2+|S1, O1-|S2, O2-|S1, O4|S2, O3|S1.
  std::vector<Inequality> bounds;
  // One entry per element of o5 (f(e|S1)) and of o6 (f(e|S2)).
  std::vector<Inequality> residuals;
  std::int64_t value_queries = 0;

  bool holds() const;
};

// `residual_bound` is 0 for kExact and the last threshold tried for
// kThreshold.
GainBounds check_gain_bounds(const InsertionLog& log,
                             const ClassifiedOptimal& classes,
                             const PiMapping& pi, const ValueOracle& f,
                             Variant variant, double epsilon,
                             double residual_bound,
                             double tolerance = kDefaultTolerance);

struct GlobalBound {
  // "twin", "threshold", or "degenerate" when S1 or S2 is empty.
  std::string form;
  Inequality bound;
  // f(S*) / f(O), 1 when f(O) = 0.
  double ratio = 1.0;
  double ratio_floor = 0.0;
  bool ratio_holds = true;

  bool holds() const { return bound.holds && ratio_holds; }
};

// kExact: f(O) <= (1 + p)(f(S1) + f(S2)), ratio >= 1/(2p + 2).
// kThreshold: f(O) <= [1 + (1 + eps) p](f(S1) + f(S2)) + 2 eps f(O), ratio
// >= 1/(2p + 2) - eps.
// With S1 or S2 empty the run is near optimal instead: f(O) <= f(S*)
// (kExact) or f(O) <= f(S*) + eps f(O) (kThreshold).
GlobalBound check_global_bound(const RunReport& run, double o_value,
                               Variant variant, double epsilon, int p,
                               double tolerance = kDefaultTolerance);

struct CertifyOptions {
  Variant variant = Variant::kExact;
  double epsilon = 0.0;
  int p = 1;
  double tolerance = kDefaultTolerance;
};

struct Certificate {
  ClassifiedOptimal classes;
  PiMapping pi;
  // Set when build_pi failed; the later stages are then skipped.
  std::string pi_error;
  std::vector<std::string> structure_failures;
  GainBounds gains;
  GlobalBound global;
  std::int64_t value_queries = 0;
  std::int64_t query_budget = 0;

  bool passed() const;
};

// Runs every stage against an optimal O with value o_value. Oracle queries
// stay within 4(|O| + |S1| + |S2|) + 6.
Certificate certify_run(const RunReport& run, const ValueOracle& f,
                        const IndependenceOracle& constraint,
                        const ElementSet& o, double o_value,
                        const CertifyOptions& options);

}  // namespace twinopt

#endif  // TWINOPT_CERTIFY_H_
