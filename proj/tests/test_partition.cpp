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
#include "sforge/oracle.hpp"
#include "sforge/partition.hpp"

using namespace sforge;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

void check_split(const Graph& g, const PartitionResult& r, int a1, int b1, int a2, int b2) {
  REQUIRE(r.success());
  CHECK(r.first.size() + r.second.size() == g.num_edges());
  for (EdgeId e : r.first) CHECK_FALSE(r.second.contains(e));
  CHECK(brute_sparse(g.edge_subgraph(r.first), a1, b1).sparse());
  CHECK(brute_sparse(g.edge_subgraph(r.second), a2, b2).sparse());
}

}  // namespace

TEST_CASE("K4 splits into two spanning trees") {
  const Graph k4 = complete_graph(4);
  const auto r = matroid_union_partition(k4, make_oracle(k4, 1, -1), make_oracle(k4, 1, -1));
  check_split(k4, r, 1, -1, 1, -1);
  CHECK(r.first.size() == 3);
}

TEST_CASE("the empty graph splits trivially") {
  const Graph g(4);
  const auto r = matroid_union_partition(g, make_oracle(g, 1, -1), make_oracle(g, 1, 1));
  CHECK(r.success());
  CHECK(r.first.empty());
  CHECK(r.second.empty());
}

TEST_CASE("disconnected counterexample yields a deficiency spanning both copies") {
  const Graph g = gen_counterexample_disconnected(1, 1, 5, 2);
  const auto m1 = make_oracle(g, 1, -1);
  const auto m2 = make_oracle(g, 1, 1);
  const auto r = matroid_union_partition(g, m1, m2);
  REQUIRE_FALSE(r.success());
  CHECK(r.r1 + r.r2 < r.deficient.size());
  CHECK(r.r1 == m1.rank(r.deficient));
  // Each copy alone is not deficient: 4 + 6 = 10 edges.
  for (int copy = 0; copy < 2; ++copy) {
    std::vector<EdgeId> ids;
    for (EdgeId e : r.deficient) {
      if (g.edge(e).u / 5 == copy) ids.push_back(e);
    }
    const EdgeSet part(g, ids);
    CHECK(m1.rank(part) + m2.rank(part) >= part.size());
  }
  CHECK_FALSE(brute_partition_exists(g, 1, -1, 1, 1).has_value());
}

TEST_CASE("minimized certificates stay deficient and are minimal") {
  const Graph g = gen_counterexample_ring(1, 3);
  const auto m1 = make_oracle(g, 1, -1);
  const auto m2 = make_oracle(g, 1, -2);
  const auto r = matroid_union_partition(g, m1, m2, {.minimize_certificate = true});
  REQUIRE_FALSE(r.success());
  CHECK(r.r1 + r.r2 < r.deficient.size());
  for (EdgeId e : r.deficient) {
    auto mask = r.deficient.mask();
    mask[e] = false;
    const EdgeSet smaller = EdgeSet::from_mask(g, mask);
    CHECK(m1.rank(smaller) + m2.rank(smaller) >= smaller.size());
  }
}

TEST_CASE("counterexample families are not partitionable") {
  const Graph ring = gen_counterexample_ring(1, 3);
  CHECK_FALSE(partition_sparse(ring, 1, -1, 1, -2).success());
  const Graph glued = gen_counterexample_glued_trees(2);
  const auto r = partition_sparse(glued, 2, -1, 2, -3);
  REQUIRE_FALSE(r.success());
  CHECK(r.r1 + r.r2 < r.deficient.size());
}

TEST_CASE("Nash-Williams and Hakimi splits on random graphs") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 9;
    const Graph forests = random_sparse_graph(n, 100, SparsityParams(2, -2), rng());
    check_split(forests, partition_sparse(forests, 1, -1, 1, -1), 1, -1, 1, -1);
    const Graph pseudo = random_sparse_graph(n, 100, SparsityParams(2, 0), rng());
    check_split(pseudo, partition_sparse(pseudo, 1, 0, 1, 0), 1, 0, 1, 0);
  }
}

TEST_CASE("outcomes agree with exhaustive search on all graphs up to 6 vertices") {
  struct Params {
    int a1, b1, a2, b2;
  };
  const Params params[] = {{1, -1, 1, -1}, {1, -1, 1, 0}, {1, 0, 1, 0},  {1, -1, 1, 1},
                           {1, 1, 1, 1},   {1, -1, 2, -3}, {1, -1, 1, -2}, {2, -1, 1, 0},
                           {1, -2, 1, 1},  {1, 0, 2, -2}};
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (const Params& p : params) {
        const auto m1 = make_oracle(g, p.a1, p.b1);
        const auto m2 = make_oracle(g, p.a2, p.b2);
        const bool fast = matroid_union_partition(g, m1, m2).success();
        const bool slow = brute_partition_exists(g, p.a1, p.b1, p.a2, p.b2).has_value();
        CHECK(fast == slow);
      }
    }
  }
}

TEST_CASE("partition_sparse checks its precondition") {
  try {
    partition_sparse(complete_graph(5), 1, -1, 1, -1);
    FAIL("expected NotSparseError");
  } catch (const NotSparseError& e) {
    CHECK_FALSE(e.certificate().sparse());
    CHECK(e.certificate().witness.size() == 5);
  }
  CHECK_THROWS_AS(partition_sparse(cycle(3), 1, -2, 1, -2), NotSparseError);
  CHECK(partition_sparse(Graph(3), 1, -2, 1, -2).success());
  CHECK_THROWS_AS(partition_sparse(cycle(3), 1, -3, 1, 0), DomainError);
  const Graph g = cycle(4);
  CHECK_THROWS_AS(matroid_union_partition(g, make_oracle(cycle(5), 1, -1),
                                          make_oracle(g, 1, -1)),
                  DomainError);
}

TEST_CASE("guaranteed hypotheses") {
  CHECK(partition_guaranteed(1, -1, 1, -1));
  CHECK(partition_guaranteed(1, 1, 2, 0));
  CHECK_FALSE(partition_guaranteed(1, -1, 1, 1));
  CHECK_FALSE(partition_guaranteed(1, -2, 1, 0));
}

TEST_CASE("forest plus remainder") {
  const Graph k5 = complete_graph(5);
  const auto r = partition_forest_plus(k5, 2, 0);
  check_split(k5, r, 1, -1, 2, -3);
  const auto c7 = partition_forest_plus(cycle(7), 1, 0);
  check_split(cycle(7), c7, 1, -1, 1, -1);
  CHECK_THROWS_AS(partition_forest_plus(k5, 1, Rational(1, 2)), NotSparseError);
  CHECK_THROWS_AS(partition_forest_plus(k5, 0, 0), DomainError);
  CHECK_THROWS_AS(partition_forest_plus(k5, 2, 1), DomainError);
}

TEST_CASE("forest plus remainder on every sparse graph up to 6 vertices") {
  const Rational eps_values[] = {0,
                                 Rational(1, 4),
                                 Rational(1, 3),
                                 Rational(1, 2),
                                 Rational(2, 3),
                                 Rational(3, 4),
                                 Rational(5, 6)};
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      for (int k = 1; k <= 3; ++k) {
        for (const Rational& eps : eps_values) {
          if (!is_sparse(g, SparsityParams(k + eps, 0)).sparse()) continue;
          const auto r = partition_forest_plus(g, k, eps);
          check_split(g, r, 1, -1, k, static_cast<int>(1 - forest_slack(k, eps)));
        }
      }
    }
  }
}
