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
#ifndef TWINOPT_TOOLS_CLI_COMMON_H_
#define TWINOPT_TOOLS_CLI_COMMON_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "twinopt/oracle.h"

namespace twinopt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitViolation = 3;
inline constexpr int kExitIo = 4;

// Bad flag values or combinations; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Seed streams derived from one master seed.
enum Stream : std::uint64_t {
  kStreamGraph = 1000,
  kStreamWeights = 1001,
  kStreamGroups = 1002,
  kStreamProbs = 1003,
  kStreamRRSets = 1004,
};

// --seed when given, else $TWINOPT_SEED, else 1.
std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag);

std::vector<double> parse_number_list(const std::string& text);
std::pair<double, double> parse_range(const std::string& text);
std::vector<std::string> split(const std::string& text, char sep);

// Path -> SHA-256 of every input file read.
using InputHashes = std::map<std::string, std::string>;

// Constraint spec: terms joined by '+' are intersected.
//   uniform:K          at most K elements
//   partition:PATH:K   at most K per part, parts from a partition file
//   groups:H:K         at most K per part, H random parts (seeded)
//   seed:V:M:K         marketing seed matroid
//   seed:PATH          seed matroid from a "|V| m k" file
std::shared_ptr<IndependenceOracle> build_constraint(const std::string& spec,
                                                     int n,
                                                     std::uint64_t seed,
                                                     InputHashes& inputs);

// Replaces every "{key}" in text.
std::string substitute(std::string text, const std::string& key,
                       const std::string& value);

struct ObjectiveOptions {
  std::string kind = "cut";
  std::string graph;
  std::vector<std::string> rrsets;
  std::string costs;
  std::string weights;
  int nodes = -1;
  std::optional<double> budget;
};

std::shared_ptr<ValueOracle> build_objective(const ObjectiveOptions& options,
                                             InputHashes& inputs);

nlohmann::json objective_json(const ObjectiveOptions& options);
nlohmann::json members_json(const ElementSet& s);

// Writes text to path, or to stdout when path is empty or "-".
void emit(const std::string& path, const std::string& text);

// Stable JSON text: two-space indent and a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace twinopt::cli

#endif  // TWINOPT_TOOLS_CLI_COMMON_H_
