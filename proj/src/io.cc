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
#include "twinopt/io.h"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <memory>
#include <sstream>
#include <system_error>

namespace twinopt {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

// Non-empty, non-comment lines split on blanks.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() == '#') continue;
    Line out{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) out.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!out.fields.empty()) lines.push_back(std::move(out));
  }
  return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw IoError("line " + std::to_string(line) + ": " + what);
}

int to_int(std::string_view s, int line) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

double to_double(std::string_view s, int line) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    fail(line, "expected a number, got '" + std::string(s) + "'");
  }
  return v;
}

void expect_fields(const Line& line, std::size_t count) {
  if (line.fields.size() != count) {
    fail(line.number, "expected " + std::to_string(count) + " fields");
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot create '" + path + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.close();
  if (!out) throw IoError("cannot write '" + path + "'");
}

std::string format_double(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw IoError("cannot format number");
  return std::string(buf, ptr);
}

std::string format_graph(const WeightedGraph& g) {
  std::string out = "# n " + std::to_string(g.num_nodes()) + " directed " +
                    (g.directed() ? "1" : "0") + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           format_double(g.directed() ? e.prob : e.weight) + "\n";
  }
  return out;
}

WeightedGraph parse_graph(std::string_view text) {
  // The header is a comment line, so find it before tokenizing.
  int n = -1;
  bool directed = false;
  {
    std::string header(text.substr(0, text.find('\n')));
    std::istringstream in(header);
    std::string hash, key_n, key_d;
    int nodes = -1, dir = -1;
    if (in >> hash >> key_n >> nodes >> key_d >> dir && hash == "#" &&
        key_n == "n" && key_d == "directed" && nodes >= 0 &&
        (dir == 0 || dir == 1)) {
      n = nodes;
      directed = dir == 1;
    }
  }
  const auto lines = tokenize(text);
  if (n < 0) {
    n = 0;
    for (const Line& line : lines) {
      expect_fields(line, 3);
      n = std::max({n, to_int(line.fields[0], line.number) + 1,
                    to_int(line.fields[1], line.number) + 1});
    }
  }
  WeightedGraph g(n, directed);
  for (const Line& line : lines) {
    expect_fields(line, 3);
    const int u = to_int(line.fields[0], line.number);
    const int v = to_int(line.fields[1], line.number);
    const double x = to_double(line.fields[2], line.number);
    try {
      if (directed) g.add_edge(u, v, 1.0, x);
      else g.add_edge(u, v, x, 1.0);
    } catch (const ContractViolation& e) {
      fail(line.number, e.what());
    }
  }
  return g;
}

WeightedGraph read_graph(const std::string& path) {
  try {
    return parse_graph(read_file(path));
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string format_partition(const std::vector<int>& part_of) {
  std::string out;
  for (std::size_t e = 0; e < part_of.size(); ++e) {
    out += std::to_string(e) + " " + std::to_string(part_of[e]) + "\n";
  }
  return out;
}

std::vector<int> parse_partition(std::string_view text, int n) {
  std::vector<int> part(static_cast<std::size_t>(n), -1);
  for (const Line& line : tokenize(text)) {
    expect_fields(line, 2);
    const int e = to_int(line.fields[0], line.number);
    const int p = to_int(line.fields[1], line.number);
    if (e < 0 || e >= n) fail(line.number, "element out of range");
    if (p < 0) fail(line.number, "negative part id");
    if (part[static_cast<std::size_t>(e)] >= 0) fail(line.number, "element listed twice");
    part[static_cast<std::size_t>(e)] = p;
  }
  for (int e = 0; e < n; ++e) {
    if (part[static_cast<std::size_t>(e)] < 0) {
      throw IoError("element " + std::to_string(e) + " has no part");
    }
  }
  return part;
}

std::vector<int> read_partition(const std::string& path, int n) {
  try {
    return parse_partition(read_file(path), n);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string format_rrsets(const RRSetCollection& z) {
  std::string out;
  for (int i = 0; i < z.num_sets(); ++i) {
    bool first = true;
    for (Node u : z.set(i)) {
      if (!first) out += ' ';
      out += std::to_string(u);
      first = false;
    }
    out += '\n';
  }
  return out;
}

RRSetCollection parse_rrsets(std::string_view text, int num_nodes) {
  std::vector<std::vector<Node>> sets;
  for (const Line& line : tokenize(text)) {
    std::vector<Node> set;
    for (std::string_view f : line.fields) {
      const int u = to_int(f, line.number);
      if (u < 0 || u >= num_nodes) fail(line.number, "node out of range");
      set.push_back(u);
    }
    sets.push_back(std::move(set));
  }
  if (sets.empty()) throw IoError("no RR-sets");
  return RRSetCollection(num_nodes, std::move(sets));
}

RRSetCollection read_rrsets(const std::string& path, int num_nodes) {
  try {
    return parse_rrsets(read_file(path), num_nodes);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::vector<double> parse_values(std::string_view text, int n) {
  std::vector<double> values(static_cast<std::size_t>(n), 0.0);
  for (const Line& line : tokenize(text)) {
    expect_fields(line, 2);
    const int id = to_int(line.fields[0], line.number);
    if (id < 0 || id >= n) fail(line.number, "id out of range");
    values[static_cast<std::size_t>(id)] = to_double(line.fields[1], line.number);
  }
  return values;
}

std::vector<double> read_values(const std::string& path, int n) {
  try {
    return parse_values(read_file(path), n);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string format_values(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += std::to_string(i) + " " + format_double(values[i]) + "\n";
  }
  return out;
}

SeedConfig read_seed_config(const std::string& path) {
  const auto lines = tokenize(read_file(path));
  if (lines.size() != 1 || lines[0].fields.size() != 3) {
    throw IoError(path + ": expected one line '|V| m k'");
  }
  SeedConfig c;
  c.num_nodes = to_int(lines[0].fields[0], lines[0].number);
  c.num_products = to_int(lines[0].fields[1], lines[0].number);
  c.k = to_int(lines[0].fields[2], lines[0].number);
  return c;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw IoError("SHA-256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

std::string sha256_file(const std::string& path) {
  return sha256_hex(read_file(path));
}

}  // namespace twinopt
