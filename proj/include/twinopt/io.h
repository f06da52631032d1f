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
// Plain-text instance formats. Lines starting with '#' are comments.
//
//   graph      "# n <nodes> directed <0|1>" header, then "u v w" per edge;
//              the third column is the weight when undirected and the
//              activation probability p_uv when directed.
//   partition  "element_id part_id" per element.
//   rr-sets    one set per line, space-separated node ids.
//   values     "id value" per line (node costs, modular weights).
//   seed       "|V| m k" on one line.

#ifndef TWINOPT_IO_H_
#define TWINOPT_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "twinopt/graph.h"
#include "twinopt/objectives.h"

namespace twinopt {

// Unreadable, unwritable or malformed files.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
// Replaces the file contents.
void write_file(const std::string& path, std::string_view content);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

std::string format_graph(const WeightedGraph& g);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph(const std::string& path);

std::string format_partition(const std::vector<int>& part_of);
// Every element in [0, n) must appear exactly once.
std::vector<int> parse_partition(std::string_view text, int n);
std::vector<int> read_partition(const std::string& path, int n);

std::string format_rrsets(const RRSetCollection& z);
RRSetCollection parse_rrsets(std::string_view text, int num_nodes);
RRSetCollection read_rrsets(const std::string& path, int num_nodes);

// Ids not listed default to 0. Ids must be in [0, n).
std::vector<double> parse_values(std::string_view text, int n);
std::vector<double> read_values(const std::string& path, int n);
std::string format_values(const std::vector<double>& values);

struct SeedConfig {
  int num_nodes = 0;
  int num_products = 0;
  int k = 0;
};
SeedConfig read_seed_config(const std::string& path);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);
std::string sha256_file(const std::string& path);

}  // namespace twinopt

#endif  // TWINOPT_IO_H_
