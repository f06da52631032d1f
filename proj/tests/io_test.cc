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
#include <filesystem>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "twinopt/generators.h"
#include "twinopt/io.h"

namespace twinopt {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("twinopt_io_" + name)).string();
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
  for (double x : {0.0, 0.1, 1.0 / 3, 1e-300, -2.5, 123456789.125}) {
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
  EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(GraphIoTest, RoundTripBothKinds) {
  for (bool directed : {false, true}) {
    WeightedGraph g = gen_er(12, 0.3, 4, directed);
    g = directed ? assign_probs_uniform(g, 0.0, 1.0, 5) : assign_weights_uniform(g, 0.0, 3.0, 5);
    const WeightedGraph back = parse_graph(format_graph(g));
    EXPECT_EQ(back.num_nodes(), 12);
    EXPECT_EQ(back.directed(), directed);
    ASSERT_EQ(back.num_edges(), g.num_edges());
    for (int i = 0; i < g.num_edges(); ++i) {
      EXPECT_EQ(back.edges()[i].u, g.edges()[i].u);
      EXPECT_EQ(back.edges()[i].v, g.edges()[i].v);
      if (directed) {
        EXPECT_EQ(back.edges()[i].prob, g.edges()[i].prob);
      } else {
        EXPECT_EQ(back.edges()[i].weight, g.edges()[i].weight);
      }
    }
    EXPECT_EQ(format_graph(back), format_graph(g));
  }
}

TEST(GraphIoTest, HeaderlessEdgeListIsUndirected) {
  const WeightedGraph g = parse_graph("0 1 2.5\n3 1 1\n");
  EXPECT_EQ(g.num_nodes(), 4);
  EXPECT_FALSE(g.directed());
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_DOUBLE_EQ(g.edges()[0].weight, 2.5);
}

TEST(GraphIoTest, MalformedInputs) {
  EXPECT_THROW(parse_graph("0 x 1\n"), IoError);
  EXPECT_THROW(parse_graph("# n 2 directed 0\n0 5 1\n"), IoError);
  EXPECT_THROW(parse_graph("# n 2 directed 1\n0 1 1.5\n"), IoError);
  EXPECT_THROW(read_graph(temp_path("missing_file")), IoError);
}

TEST(PartitionIoTest, RoundTripAndValidation) {
  const std::vector<int> part = {0, 2, 1, 0};
  EXPECT_EQ(parse_partition(format_partition(part), 4), part);
  EXPECT_THROW(parse_partition("0 0\n1 0\n", 3), IoError);
  EXPECT_THROW(parse_partition("0 0\n0 1\n1 0\n", 2), IoError);
  EXPECT_THROW(parse_partition("0 0\n2 0\n", 2), IoError);
}

TEST(RRSetIoTest, RoundTrip) {
  const RRSetCollection z(5, {{0, 3}, {4}, {1, 2, 3}});
  const RRSetCollection back = parse_rrsets(format_rrsets(z), 5);
  ASSERT_EQ(back.num_sets(), 3);
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(std::vector<Node>(back.set(i).begin(), back.set(i).end()),
              std::vector<Node>(z.set(i).begin(), z.set(i).end()));
  }
  EXPECT_THROW(parse_rrsets("", 5), IoError);
  EXPECT_THROW(parse_rrsets("0 9\n", 5), IoError);
}

TEST(ValuesIoTest, DefaultsAndRange) {
  const std::vector<double> v = parse_values("2 1.5\n0 -1\n", 4);
  EXPECT_EQ(v, (std::vector<double>{-1, 0, 1.5, 0}));
  EXPECT_EQ(parse_values(format_values(v), 4), v);
  EXPECT_THROW(parse_values("4 1\n", 4), IoError);
  EXPECT_THROW(parse_values("1\n", 4), IoError);
}

TEST(FileIoTest, WriteReadAndSeedConfig) {
  const std::string path = temp_path("seed.txt");
  write_file(path, "10 3 2\n");
  EXPECT_EQ(read_file(path), "10 3 2\n");
  const SeedConfig c = read_seed_config(path);
  EXPECT_EQ(c.num_nodes, 10);
  EXPECT_EQ(c.num_products, 3);
  EXPECT_EQ(c.k, 2);
  write_file(path, "10 3\n");
  EXPECT_THROW(read_seed_config(path), IoError);
  std::filesystem::remove(path);
  EXPECT_THROW(write_file(temp_path("no_dir/x/y"), "a"), IoError);
}

TEST(Sha256Test, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  const std::string path = temp_path("hash.txt");
  write_file(path, "abc");
  EXPECT_EQ(sha256_file(path), sha256_hex("abc"));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace twinopt
