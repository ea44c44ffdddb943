// Copyright 2026 The Authors.
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


#include <doctest.h>

#include <random>

#include "sforge/error.hpp"
#include "sforge/generators.hpp"
#include "sforge/graph_io.hpp"

using namespace sforge;

TEST_CASE("graph6 decodes a known 5-vertex graph") {
  // '?' is 0 and '{' is 60 = 111100: the four pairs (i, 4).
  const Graph g = parse_graph6("D?{");
  CHECK(g == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
}

TEST_CASE("graph6 of small graphs") {
  CHECK(parse_graph6("@") == Graph(1));
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(complete_graph(3)) == "Bw");
  CHECK(parse_graph6("Bw\n") == complete_graph(3));
  CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
  CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng() % 21);
    const Graph g = random_graph(n, 0.4, rng());
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 long size form") {
  const Graph g = random_graph(70, 0.1, 3);
  const std::string text = write_graph6(g);
  CHECK(text[0] == '~');
  CHECK(parse_graph6(text) == g);
}

TEST_CASE("graph6 errors name the byte offset") {
  try {
    parse_graph6("B!");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 1);
  }
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bw?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("edge lists") {
  CHECK(parse_edgelist("0 1\n1 2\n2 0\n") == complete_graph(3));
  CHECK(parse_edgelist("n = 5\n# comment\n\n0 1\n") == Graph(5, {{0, 1}}));
  CHECK_THROWS_AS(parse_edgelist("0 0"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("0 1\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("0 x"), ParseError);
  CHECK_THROWS_AS(parse_edgelist("n = 2\n0 2"), ParseError);
  const Graph g = random_graph(9, 0.5, 11);
  CHECK(parse_edgelist(write_edgelist(g)) == g);
}
