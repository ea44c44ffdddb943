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

#include "sforge/error.hpp"
#include "sforge/graph.hpp"
#include "sforge/union_find.hpp"

using namespace sforge;

TEST_CASE("edges are normalized and sorted lexicographically") {
  const Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  REQUIRE(g.num_edges() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{1, 3});
  CHECK(g.degree(1) == 2);
  CHECK(g.find_edge(3, 1) == 2);
  CHECK_FALSE(g.find_edge(2, 3).has_value());
}

TEST_CASE("simple-graph invariants are enforced") {
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Graph(3, {{-1, 2}}), DomainError);
}

TEST_CASE("neighbors are sorted and carry edge ids") {
  const Graph g(4, {{2, 0}, {0, 3}, {0, 1}});
  const auto nb = g.neighbors(0);
  REQUIRE(nb.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(nb[i].neighbor == i + 1);
    CHECK(g.edge(nb[i].edge) == Edge{0, i + 1});
  }
}

TEST_CASE("edge sets") {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const EdgeSet s(g, {3, 1, 3});
  CHECK(s.size() == 2);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(0));
  CHECK(EdgeSet::all(g).size() == 4);
  CHECK(EdgeSet::none(g).empty());
  CHECK(EdgeSet::from_mask(g, s.mask()) == s);
  CHECK_THROWS_AS(EdgeSet(g, {4}), DomainError);
}

TEST_CASE("edge_subgraph keeps vertices and renumbers edges") {
  const Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const Graph sub = g.edge_subgraph(EdgeSet(g, {1, 3}));
  CHECK(sub.num_vertices() == 5);
  REQUIRE(sub.num_edges() == 2);
  CHECK(sub.edge(0) == Edge{1, 2});
  CHECK(sub.edge(1) == Edge{3, 4});
}

TEST_CASE("vertex sets, spans and induced edges") {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const VertexSet tri(g, {2, 0, 1});
  CHECK(tri.size() == 3);
  CHECK(g.count_edges_within(tri) == 3);
  CHECK(induced_edges(g, tri) == EdgeSet(g, {0, 1, 2}));
  CHECK(spanned_vertices(g, EdgeSet(g, {3})) == VertexSet(g, {3, 4}));
  CHECK_THROWS_AS(VertexSet(g, {5}), DomainError);
}

TEST_CASE("forests and triangles") {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}, {3, 4}});
  CHECK(is_forest(g, EdgeSet(g, {0, 1, 3, 5})));
  CHECK_FALSE(is_forest(g, EdgeSet::all(g)));
  CHECK(count_triangles(g, EdgeSet::all(g)) == 2);
  CHECK(count_triangles(g, EdgeSet(g, {0, 1, 2})) == 1);
  CHECK(count_triangles(g, EdgeSet::none(g)) == 0);
}

TEST_CASE("union find") {
  UnionFind uf(4);
  CHECK(uf.unite(0, 1));
  CHECK(uf.unite(2, 3));
  CHECK_FALSE(uf.unite(1, 0));
  CHECK(uf.same(0, 1));
  CHECK_FALSE(uf.same(1, 2));
}
