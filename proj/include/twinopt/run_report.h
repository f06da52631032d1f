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

#ifndef TWINOPT_RUN_REPORT_H_
#define TWINOPT_RUN_REPORT_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twinopt/element_set.h"

namespace twinopt {

enum class Side { kFirst = 1, kSecond = 2 };

inline Side other(Side s) {
  return s == Side::kFirst ? Side::kSecond : Side::kFirst;
}

struct Insertion {
  Element element = 0;
  Side side = Side::kFirst;
  // 0-based position over S1 u S2.
  int position = 0;
  // f(element | pre(element, side)) at insertion time.
  double gain = 0.0;
  // Acceptance threshold in force, for threshold-based solvers.
  std::optional<double> threshold;
};

// Ordered record of every insertion into S1 or S2.
class InsertionLog {
 public:
  explicit InsertionLog(int universe = 0) : universe_(universe) {}

  int universe() const { return universe_; }

  // Appends with the next position. Throws ContractViolation if the element
  // was already logged.
  void record(Element e, Side side, double gain,
              std::optional<double> threshold = std::nullopt);

  const std::vector<Insertion>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // Elements of `side` inserted before `e`; e must be logged.
  ElementSet pre(Element e, Side side) const;
  // The entry for e, if logged.
  const Insertion* find(Element e) const;

  // Elements of `side` in insertion order.
  std::vector<Element> order(Side side) const;

  // Final S1 and S2.
  std::pair<ElementSet, ElementSet> replay() const;

 private:
  int universe_;
  std::vector<Insertion> entries_;
  std::vector<int> index_of_;  // element -> entry index, -1 if absent
};

struct RunReport {
  std::string algorithm;
  ElementSet s1;
  ElementSet s2;
  ElementSet s_star;
  double f_s1 = 0.0;
  double f_s2 = 0.0;
  double f_star = 0.0;
  InsertionLog log;
  std::int64_t value_queries = 0;
  std::int64_t independence_checks = 0;
  double wall_time_s = 0.0;
  std::map<std::string, double> parameters;
  std::optional<std::uint64_t> seed;
  std::string rng;
};

// Picks S* = argmax{f(S1), f(S2)}, preferring S1 on ties.
void settle_best(RunReport& report);

}  // namespace twinopt

#endif  // TWINOPT_RUN_REPORT_H_
