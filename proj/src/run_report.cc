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

#include "twinopt/run_report.h"

#include <string>

namespace twinopt {

void InsertionLog::record(Element e, Side side, double gain,
                          std::optional<double> threshold) {
  if (e < 0 || e >= universe_) {
    throw ContractViolation("logged element " + std::to_string(e) +
                            " out of range");
  }
  if (index_of_.empty()) index_of_.assign(static_cast<std::size_t>(universe_), -1);
  if (index_of_[static_cast<std::size_t>(e)] >= 0) {
    throw ContractViolation("element " + std::to_string(e) +
                            " inserted twice");
  }
  index_of_[static_cast<std::size_t>(e)] = static_cast<int>(entries_.size());
  entries_.push_back(Insertion{e, side, static_cast<int>(entries_.size()),
                               gain, threshold});
}

const Insertion* InsertionLog::find(Element e) const {
  if (e < 0 || e >= universe_ || index_of_.empty()) return nullptr;
  const int idx = index_of_[static_cast<std::size_t>(e)];
  return idx < 0 ? nullptr : &entries_[static_cast<std::size_t>(idx)];
}

ElementSet InsertionLog::pre(Element e, Side side) const {
  const Insertion* at = find(e);
  if (at == nullptr) {
    throw ContractViolation("pre() of element " + std::to_string(e) +
                            " which was never inserted");
  }
  ElementSet out(universe_);
  for (int i = 0; i < at->position; ++i) {
    const Insertion& entry = entries_[static_cast<std::size_t>(i)];
    if (entry.side == side) out.insert(entry.element);
  }
  return out;
}

std::vector<Element> InsertionLog::order(Side side) const {
  std::vector<Element> out;
  for (const Insertion& entry : entries_) {
    if (entry.side == side) out.push_back(entry.element);
  }
  return out;
}

std::pair<ElementSet, ElementSet> InsertionLog::replay() const {
  ElementSet s1(universe_);
  ElementSet s2(universe_);
  for (const Insertion& entry : entries_) {
    (entry.side == Side::kFirst ? s1 : s2).insert(entry.element);
  }
  return {s1, s2};
}

void settle_best(RunReport& report) {
  if (report.f_s1 >= report.f_s2) {
    report.s_star = report.s1;
    report.f_star = report.f_s1;
  } else {
    report.s_star = report.s2;
    report.f_star = report.f_s2;
  }
}

}  // namespace twinopt
