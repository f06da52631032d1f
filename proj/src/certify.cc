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

#include "twinopt/certify.h"

#include <algorithm>
#include <string>

namespace twinopt {

namespace {

std::size_t idx(Element e) { return static_cast<std::size_t>(e); }

std::string set_name(Side side) { return side == Side::kFirst ? "S1" : "S2"; }

}  // namespace

ElementSet ClassifiedOptimal::domain1() const {
  return o1_plus | o1_minus | o2_minus | o3;
}

ElementSet ClassifiedOptimal::domain2() const {
  return o1_minus | o2_plus | o2_minus | o4;
}

ClassifiedOptimal classify(const InsertionLog& log, const ElementSet& o,
                           const IndependenceOracle& constraint) {
  const int n = log.universe();
  if (o.universe() != n || constraint.ground_size() != n) {
    throw ContractViolation("classify: ground sets differ");
  }
  const auto [s1, s2] = log.replay();
  ClassifiedOptimal c{ElementSet(n), ElementSet(n), ElementSet(n),
                      ElementSet(n), ElementSet(n), ElementSet(n),
                      ElementSet(n), ElementSet(n)};
  o.for_each([&](Element e) {
    if (s1.contains(e)) {
      const bool fits = constraint.is_independent(with(log.pre(e, Side::kSecond), e));
      (fits ? c.o1_plus : c.o1_minus).insert(e);
    } else if (s2.contains(e)) {
      const bool fits = constraint.is_independent(with(log.pre(e, Side::kFirst), e));
      (fits ? c.o2_plus : c.o2_minus).insert(e);
    } else {
      if (!constraint.is_independent(with(s1, e))) c.o3.insert(e);
      else c.o5.insert(e);
      if (!constraint.is_independent(with(s2, e))) c.o4.insert(e);
      else c.o6.insert(e);
    }
  });
  return c;
}

int PiMapping::max_preimage() const {
  int best = 0;
  for (int k : preimage1) best = std::max(best, k);
  for (int k : preimage2) best = std::max(best, k);
  return best;
}

std::map<int, int> PiMapping::preimage_histogram(const InsertionLog& log) const {
  std::map<int, int> hist;
  for (const Insertion& entry : log.entries()) {
    const auto& counts =
        entry.side == Side::kFirst ? preimage1 : preimage2;
    ++hist[counts[idx(entry.element)]];
  }
  return hist;
}

namespace {

// One side of the sweep. `identity` holds the domain elements that must map
// to themselves.
void sweep(const InsertionLog& log, Side side, ElementSet remaining,
           const ElementSet& identity, const IndependenceOracle& constraint,
           int p, std::vector<Element>& pi, std::vector<int>& preimage) {
  const std::vector<Element> order = log.order(side);
  const int n = log.universe();
  for (std::size_t j = order.size(); j-- > 0;) {
    const Element u = order[j];
    ElementSet prefix(n);
    for (std::size_t i = 0; i < j; ++i) prefix.insert(order[i]);

    std::vector<Element> a;
    (remaining - prefix).for_each([&](Element x) {
      if (constraint.is_independent(with(prefix, x))) a.push_back(x);
    });

    std::vector<Element> d;
    if (static_cast<int>(a.size()) <= p) {
      d = a;
    } else {
      if (identity.contains(u)) d.push_back(u);
      for (Element x : a) {
        if (static_cast<int>(d.size()) == p) break;
        if (x != u || !identity.contains(u)) d.push_back(x);
      }
    }
    for (Element x : d) {
      pi[idx(x)] = u;
      ++preimage[idx(u)];
      remaining.erase(x);
    }
  }
  if (!remaining.empty()) {
    throw CertificationFailure("pi into " + set_name(side) +
                               " leaves unmapped elements " +
                               remaining.to_string());
  }
}

}  // namespace

PiMapping build_pi(const InsertionLog& log, const ClassifiedOptimal& classes,
                   const IndependenceOracle& constraint, int p) {
  if (p < 1) throw ContractViolation("build_pi needs p >= 1");
  const int n = log.universe();
  PiMapping pi;
  pi.p = p;
  pi.pi1.assign(idx(n), -1);
  pi.pi2.assign(idx(n), -1);
  pi.preimage1.assign(idx(n), 0);
  pi.preimage2.assign(idx(n), 0);
  sweep(log, Side::kFirst, classes.domain1(), classes.o1_plus | classes.o1_minus,
        constraint, p, pi.pi1, pi.preimage1);
  sweep(log, Side::kSecond, classes.domain2(),
        classes.o2_plus | classes.o2_minus, constraint, p, pi.pi2,
        pi.preimage2);
  return pi;
}

std::vector<std::string> check_pi_structure(
    const InsertionLog& log, const ClassifiedOptimal& classes,
    const PiMapping& pi, const IndependenceOracle& constraint) {
  std::vector<std::string> failures;
  auto check_side = [&](Side side, const ElementSet& domain,
                        const ElementSet& identity,
                        const std::vector<Element>& map,
                        const std::vector<int>& preimage) {
    const std::string name = "pi" + std::to_string(static_cast<int>(side));
    for (Element e = 0; e < log.universe(); ++e) {
      const Element y = map[idx(e)];
      if (!domain.contains(e)) {
        if (y >= 0) failures.push_back(name + " maps " + std::to_string(e) +
                                       " outside its domain");
        continue;
      }
      const Insertion* target = y >= 0 ? log.find(y) : nullptr;
      if (target == nullptr || target->side != side) {
        failures.push_back(name + "(" + std::to_string(e) + ") is not in " +
                           set_name(side));
        continue;
      }
      if (!constraint.is_independent(with(log.pre(y, side), e))) {
        failures.push_back("pre(" + name + "(" + std::to_string(e) +
                           ")) + " + std::to_string(e) + " is dependent");
      }
      if (identity.contains(e) && y != e) {
        failures.push_back(name + " is not the identity on " +
                           std::to_string(e));
      }
    }
    for (Element y = 0; y < log.universe(); ++y) {
      if (preimage[idx(y)] > pi.p) {
        failures.push_back(name + " has " + std::to_string(preimage[idx(y)]) +
                           " preimages of " + std::to_string(y));
      }
    }
  };
  check_side(Side::kFirst, classes.domain1(), classes.o1_plus | classes.o1_minus,
             pi.pi1, pi.preimage1);
  check_side(Side::kSecond, classes.domain2(),
             classes.o2_plus | classes.o2_minus, pi.pi2, pi.preimage2);
  return failures;
}

bool GainBounds::holds() const {
  for (const auto& b : bounds) {
    if (!b.holds) return false;
  }
  for (const auto& r : residuals) {
    if (!r.holds) return false;
  }
  return true;
}

GainBounds check_gain_bounds(const InsertionLog& log,
                             const ClassifiedOptimal& classes,
                             const PiMapping& pi, const ValueOracle& f,
                             Variant variant, double epsilon,
                             double residual_bound, double tolerance) {
  const auto [s1, s2] = log.replay();
  GainBounds out;
  out.f_s1 = f.evaluate(s1);
  out.f_s2 = f.evaluate(s2);
  out.value_queries = 2;
  const double c = variant == Variant::kThreshold ? 1.0 + epsilon : 1.0;

  auto delta_sum = [&](const ElementSet& cls, const std::vector<Element>& map) {
    double sum = 0.0;
    cls.for_each([&](Element e) {
      const Element y = map[idx(e)];
      const Insertion* entry = y >= 0 ? log.find(y) : nullptr;
      if (entry == nullptr) {
        throw CertificationFailure("element " + std::to_string(e) +
                                   " has no image");
      }
      sum += entry->gain;
    });
    return sum;
  };
  auto add_bound = [&](const char* name, const ElementSet& cls,
                       const ElementSet& base, double base_value,
                       const std::vector<Element>& map, double scale) {
    Inequality q;
    q.name = name;
    if (!cls.empty()) {
      q.lhs = f.evaluate(cls | base) - base_value;
      ++out.value_queries;
      q.rhs = scale * delta_sum(cls, map);
    }
    q.holds = q.lhs <= q.rhs + tolerance;
    out.bounds.push_back(q);
  };
  add_bound("O1+|S2", classes.o1_plus, s2, out.f_s2, pi.pi1, 1.0);
  add_bound("O2+|S1", classes.o2_plus, s1, out.f_s1, pi.pi2, 1.0);
  add_bound("O1-|S2", classes.o1_minus, s2, out.f_s2, pi.pi2, c);
  add_bound("O2-|S1", classes.o2_minus, s1, out.f_s1, pi.pi1, c);
  add_bound("O4|S2", classes.o4, s2, out.f_s2, pi.pi2, c);
  add_bound("O3|S1", classes.o3, s1, out.f_s1, pi.pi1, c);

  const double limit = variant == Variant::kThreshold ? residual_bound : 0.0;
  auto add_residuals = [&](const ElementSet& cls, const ElementSet& base,
                           double base_value, const char* side) {
    cls.for_each([&](Element e) {
      Inequality q;
      q.name = "f(" + std::to_string(e) + "|" + side + ")";
      q.lhs = f.gain(base, base_value, e);
      ++out.value_queries;
      q.rhs = limit;
      q.holds = q.lhs <= q.rhs + tolerance;
      out.residuals.push_back(q);
    });
  };
  add_residuals(classes.o5, s1, out.f_s1, "S1");
  add_residuals(classes.o6, s2, out.f_s2, "S2");
  return out;
}

GlobalBound check_global_bound(const RunReport& run, double o_value,
                               Variant variant, double epsilon, int p,
                               double tolerance) {
  if (p < 1) throw ContractViolation("check_global_bound needs p >= 1");
  GlobalBound g;
  const bool threshold = variant == Variant::kThreshold;
  const double eps = threshold ? epsilon : 0.0;
  g.bound.lhs = o_value;
  if (run.s1.empty() || run.s2.empty()) {
    g.form = "degenerate";
    g.bound.rhs = run.f_star + eps * o_value;
    g.ratio_floor = 1.0 - eps;
  } else if (threshold) {
    g.form = "threshold";
    g.bound.rhs = (1.0 + (1.0 + eps) * p) * (run.f_s1 + run.f_s2) +
                  2.0 * eps * o_value;
    g.ratio_floor = 1.0 / (2.0 * p + 2.0) - eps;
  } else {
    g.form = "twin";
    g.bound.rhs = (1.0 + p) * (run.f_s1 + run.f_s2);
    g.ratio_floor = 1.0 / (2.0 * p + 2.0);
  }
  g.bound.name = "global";
  g.bound.holds = g.bound.lhs <= g.bound.rhs + tolerance;
  g.ratio = o_value > 0.0 ? run.f_star / o_value : 1.0;
  g.ratio_holds = run.f_star >= g.ratio_floor * o_value - tolerance;
  return g;
}

bool Certificate::passed() const {
  return pi_error.empty() && structure_failures.empty() && gains.holds() &&
         global.holds() && value_queries <= query_budget;
}

Certificate certify_run(const RunReport& run, const ValueOracle& f,
                        const IndependenceOracle& constraint,
                        const ElementSet& o, double o_value,
                        const CertifyOptions& options) {
  Certificate cert;
  const std::int64_t before = f.query_count();
  cert.query_budget = 4 * (static_cast<std::int64_t>(o.size()) +
                           run.s1.size() + run.s2.size()) +
                      6;
  cert.classes = classify(run.log, o, constraint);
  try {
    cert.pi = build_pi(run.log, cert.classes, constraint, options.p);
  } catch (const CertificationFailure& e) {
    cert.pi_error = e.what();
    cert.value_queries = f.query_count() - before;
    return cert;
  }
  cert.structure_failures =
      check_pi_structure(run.log, cert.classes, cert.pi, constraint);

  double residual_bound = 0.0;
  if (options.variant == Variant::kThreshold) {
    const auto it = run.parameters.find("tau_min");
    residual_bound = it != run.parameters.end() ? it->second : 0.0;
  }
  cert.gains = check_gain_bounds(run.log, cert.classes, cert.pi, f,
                                 options.variant, options.epsilon,
                                 residual_bound, options.tolerance);
  cert.global = check_global_bound(run, o_value, options.variant,
                                   options.epsilon, options.p,
                                   options.tolerance);
  cert.value_queries = f.query_count() - before;
  return cert;
}

}  // namespace twinopt
