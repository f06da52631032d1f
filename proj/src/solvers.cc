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

#include "twinopt/solvers.h"

#include <array>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "twinopt/constraints.h"
#include "twinopt/rng.h"

namespace twinopt {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Forwards to the oracle while keeping the solver's own tally of queries.
class Queries {
 public:
  explicit Queries(const ValueOracle& f) : f_(f) {}

  double evaluate(const ElementSet& s) {
    ++count_;
    return f_.evaluate(s);
  }
  double gain(const ElementSet& base, double base_value, Element e) {
    ++count_;
    return f_.gain(base, base_value, e);
  }
  std::int64_t count() const { return count_; }

 private:
  const ValueOracle& f_;
  std::int64_t count_ = 0;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void check_instance(const ValueOracle& f, const IndependenceOracle& c) {
  if (f.ground_size() != c.ground_size()) {
    throw ContractViolation("objective and constraint ground sets differ");
  }
}

std::size_t idx(Element e) { return static_cast<std::size_t>(e); }

RunReport start_report(const char* algorithm, int n) {
  RunReport report;
  report.algorithm = algorithm;
  report.s1 = ElementSet(n);
  report.s2 = ElementSet(n);
  report.s_star = ElementSet(n);
  report.log = InsertionLog(n);
  return report;
}

// Greedy over `candidates` into a single set.
RunReport greedy_over(const char* algorithm, const ValueOracle& f,
                      const IndependenceOracle& constraint,
                      const ElementSet& candidates) {
  Stopwatch clock;
  const std::int64_t checks_before = constraint.check_count();
  const int n = f.ground_size();
  RunReport report = start_report(algorithm, n);
  Queries q(f);

  IndependentSetBuilder set = constraint.builder();
  const double f_empty = q.evaluate(report.s1);
  double value = f_empty;
  std::vector<char> alive(idx(n), 0);
  candidates.for_each([&](Element e) { alive[idx(e)] = 1; });

  while (true) {
    Element best = -1;
    double best_gain = kNegInf;
    for (Element e = 0; e < n; ++e) {
      if (!alive[idx(e)]) continue;
      if (!set.can_add(e)) {
        alive[idx(e)] = 0;  // stays infeasible as the set grows
        continue;
      }
      const double g = q.gain(set.members(), value, e);
      if (g > best_gain) {
        best_gain = g;
        best = e;
      }
    }
    if (best < 0 || best_gain <= 0.0) break;
    set.add(best);
    alive[idx(best)] = 0;
    value += best_gain;
    report.log.record(best, Side::kFirst, best_gain);
  }

  report.s1 = set.members();
  report.f_s1 = value;
  report.f_s2 = f_empty;
  settle_best(report);
  report.value_queries = q.count();
  report.independence_checks = constraint.check_count() - checks_before;
  report.wall_time_s = clock.seconds();
  return report;
}

}  // namespace

RunReport twin_greedy(const ValueOracle& f,
                      const IndependenceOracle& constraint) {
  check_instance(f, constraint);
  Stopwatch clock;
  const std::int64_t checks_before = constraint.check_count();
  const int n = f.ground_size();
  RunReport report = start_report("twin", n);
  Queries q(f);

  std::array<IndependentSetBuilder, 2> sides = {constraint.builder(),
                                                constraint.builder()};
  ElementSet used(n);
  const double f_empty = q.evaluate(used);
  std::array<double, 2> value = {f_empty, f_empty};
  // feasible[s][e]: S_s + e was independent when last checked. Once false it
  // stays false because S_s only grows.
  std::array<std::vector<char>, 2> feasible = {std::vector<char>(idx(n), 1),
                                               std::vector<char>(idx(n), 1)};
  std::array<std::vector<double>, 2> gain = {std::vector<double>(idx(n)),
                                             std::vector<double>(idx(n))};
  std::array<bool, 2> stale = {true, true};

  while (true) {
    for (int s = 0; s < 2; ++s) {
      if (!stale[idx(s)]) continue;
      for (Element e = 0; e < n; ++e) {
        if (used.contains(e) || !feasible[idx(s)][idx(e)]) continue;
        if (!sides[idx(s)].can_add(e)) {
          feasible[idx(s)][idx(e)] = 0;
          continue;
        }
        gain[idx(s)][idx(e)] = q.gain(sides[idx(s)].members(), value[idx(s)], e);
      }
      stale[idx(s)] = false;
    }

    int best_side = -1;
    Element best = -1;
    double best_gain = kNegInf;
    for (int s = 0; s < 2; ++s) {
      for (Element e = 0; e < n; ++e) {
        if (used.contains(e) || !feasible[idx(s)][idx(e)]) continue;
        if (gain[idx(s)][idx(e)] > best_gain) {
          best_gain = gain[idx(s)][idx(e)];
          best = e;
          best_side = s;
        }
      }
    }
    if (best < 0 || best_gain <= 0.0) break;

    sides[idx(best_side)].add(best);
    used.insert(best);
    value[idx(best_side)] += best_gain;
    stale[idx(best_side)] = true;
    report.log.record(best, best_side == 0 ? Side::kFirst : Side::kSecond,
                      best_gain);
  }

  report.s1 = sides[0].members();
  report.s2 = sides[1].members();
  report.f_s1 = value[0];
  report.f_s2 = value[1];
  settle_best(report);
  report.value_queries = q.count();
  report.independence_checks = constraint.check_count() - checks_before;
  report.wall_time_s = clock.seconds();
  return report;
}

RunReport twin_greedy_fast(const ValueOracle& f,
                           const IndependenceOracle& constraint,
                           double epsilon) {
  check_instance(f, constraint);
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ContractViolation("epsilon must lie in (0, 1)");
  }
  Stopwatch clock;
  const std::int64_t checks_before = constraint.check_count();
  const int n = f.ground_size();
  RunReport report = start_report("twinfast", n);
  report.parameters["epsilon"] = epsilon;
  Queries q(f);

  ElementSet used(n);
  const double f_empty = q.evaluate(used);
  std::array<double, 2> value = {f_empty, f_empty};

  // tau_max over feasible singletons; f({e}) = f({}) + f(e | {}).
  const IndependentSetBuilder empty = constraint.builder();
  double tau_max = kNegInf;
  for (Element e = 0; e < n; ++e) {
    if (!empty.can_add(e)) continue;
    tau_max = std::max(tau_max, f_empty + q.gain(used, f_empty, e));
  }
  report.parameters["tau_max"] = tau_max;

  std::array<IndependentSetBuilder, 2> sides = {constraint.builder(),
                                                constraint.builder()};
  if (tau_max > 0.0) {
    const int r = rank_upper_bound(constraint);
    report.parameters["rank"] = r;
    const double floor =
        epsilon * tau_max / (static_cast<double>(r) * (1.0 + epsilon));
    std::array<std::vector<char>, 2> feasible = {std::vector<char>(idx(n), 1),
                                                 std::vector<char>(idx(n), 1)};
    int passes = 0;
    double tau_min = tau_max;
    for (double tau = tau_max; tau > floor; tau /= (1.0 + epsilon)) {
      ++passes;
      tau_min = tau;
      for (Element e = 0; e < n; ++e) {
        if (used.contains(e)) continue;
        std::array<double, 2> delta = {kNegInf, kNegInf};
        for (int s = 0; s < 2; ++s) {
          if (!feasible[idx(s)][idx(e)]) continue;
          if (!sides[idx(s)].can_add(e)) {
            feasible[idx(s)][idx(e)] = 0;
            continue;
          }
          delta[idx(s)] = q.gain(sides[idx(s)].members(), value[idx(s)], e);
        }
        const int s = delta[0] >= delta[1] ? 0 : 1;
        if (delta[idx(s)] >= tau) {
          sides[idx(s)].add(e);
          used.insert(e);
          value[idx(s)] += delta[idx(s)];
          report.log.record(e, s == 0 ? Side::kFirst : Side::kSecond,
                            delta[idx(s)], tau);
        }
      }
    }
    report.parameters["passes"] = passes;
    report.parameters["tau_min"] = tau_min;
  }

  report.s1 = sides[0].members();
  report.s2 = sides[1].members();
  report.f_s1 = value[0];
  report.f_s2 = value[1];
  settle_best(report);
  report.value_queries = q.count();
  report.independence_checks = constraint.check_count() - checks_before;
  report.wall_time_s = clock.seconds();
  return report;
}

RunReport classic_greedy(const ValueOracle& f,
                         const IndependenceOracle& constraint) {
  check_instance(f, constraint);
  return greedy_over("greedy", f, constraint,
                     ElementSet::full(f.ground_size()));
}

RunReport sample_greedy(const ValueOracle& f,
                        const IndependenceOracle& constraint, double q,
                        std::uint64_t seed) {
  check_instance(f, constraint);
  if (!(q > 0.0 && q <= 1.0)) {
    throw ContractViolation("sample probability must lie in (0, 1]");
  }
  Rng rng(seed);
  ElementSet sample(f.ground_size());
  for (Element e = 0; e < f.ground_size(); ++e) {
    if (rng.bernoulli(q)) sample.insert(e);
  }
  RunReport report = greedy_over("samplegreedy", f, constraint, sample);
  report.parameters["q"] = q;
  report.parameters["sample_size"] = sample.size();
  report.seed = seed;
  report.rng = Rng::kAlgorithm;
  return report;
}

namespace {

struct ExactSearch {
  const IndependenceOracle& constraint;
  Queries& q;
  int n;
  Solution best;
  bool have_best = false;

  void visit(const IndependentSetBuilder& current, Element next) {
    const double v = q.evaluate(current.members());
    // Preorder DFS visits sets in lexicographic order, so keeping the first
    // maximum keeps the lexicographically smallest one.
    if (!have_best || v > best.value) {
      best.set = current.members();
      best.value = v;
      have_best = true;
    }
    for (Element e = next; e < n; ++e) {
      if (!current.can_add(e)) continue;
      IndependentSetBuilder child = current;
      child.add(e);
      visit(child, e + 1);
    }
  }
};

}  // namespace

Solution exact_max(const ValueOracle& f, const IndependenceOracle& constraint) {
  check_instance(f, constraint);
  if (f.ground_size() > 20) {
    throw ContractViolation("exact_max enumerates at most 20 elements");
  }
  Queries q(f);
  ExactSearch search{constraint, q, f.ground_size(), {}, false};
  search.visit(constraint.builder(), 0);
  search.best.value_queries = q.count();
  return search.best;
}

RunReport exact_report(const ValueOracle& f,
                       const IndependenceOracle& constraint) {
  Stopwatch clock;
  const std::int64_t checks_before = constraint.check_count();
  const int n = f.ground_size();
  RunReport report = start_report("exact", n);
  Solution opt = exact_max(f, constraint);
  // The empty set is the first one the search evaluates; re-query it so S2
  // carries its value.
  report.s1 = opt.set;
  report.f_s1 = opt.value;
  report.f_s2 = f.evaluate(report.s2);
  settle_best(report);
  report.value_queries = opt.value_queries + 1;
  report.independence_checks = constraint.check_count() - checks_before;
  report.wall_time_s = clock.seconds();
  return report;
}

const std::vector<std::string>& solver_names() {
  static const std::vector<std::string> names = {"twin", "twinfast", "greedy",
                                                 "samplegreedy", "exact"};
  return names;
}

bool is_randomized(std::string_view algorithm) {
  return algorithm == "samplegreedy";
}

RunReport solve(std::string_view algorithm, const ValueOracle& f,
                const IndependenceOracle& constraint,
                const SolverParams& params) {
  if (algorithm == "twin") return twin_greedy(f, constraint);
  if (algorithm == "twinfast") {
    return twin_greedy_fast(f, constraint, params.epsilon);
  }
  if (algorithm == "greedy") return classic_greedy(f, constraint);
  if (algorithm == "samplegreedy") {
    return sample_greedy(f, constraint, params.sample_prob, params.seed);
  }
  if (algorithm == "exact") return exact_report(f, constraint);
  throw ContractViolation("unknown algorithm '" + std::string(algorithm) + "'");
}

double twin_greedy_fast_query_budget(int n, int r, double epsilon) {
  const double passes = std::ceil(std::log((1.0 + epsilon) * r / epsilon) /
                                  std::log1p(epsilon));
  return n + 2.0 * n * (passes + 1.0);
}

double twin_greedy_query_budget(int n, int k) {
  return 2.0 * n * (k + 1.0) + n;
}

}  // namespace twinopt
