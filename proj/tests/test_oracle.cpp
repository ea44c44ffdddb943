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

#include <bit>
#include <cstdint>

#include "sforge/error.hpp"
#include "sforge/generators.hpp"
#include "sforge/matroid.hpp"
#include "sforge/oracle.hpp"

using namespace sforge;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("brute_sparse on a 4-cycle under (1,0)") {
  const auto cert = brute_sparse(cycle(4), 1, 0);
  CHECK(cert.sparse());
  CHECK(*cert.max_violation == Rational(0));
  CHECK(cert.witness.size() == 4);
}

TEST_CASE("brute_sparse on K4 under (1,-1) finds a cycle") {
  const Graph k4 = complete_graph(4);
  const auto cert = brute_sparse(k4, 1, -1);
  CHECK_FALSE(cert.sparse());
  CHECK(*cert.max_violation == Rational(3));
  CHECK(cert.witness.size() == 4);
  CHECK(k4.count_edges_within(cert.witness) >= cert.witness.size());
}

TEST_CASE("brute_sparse counts only sets with at least two vertices") {
  CHECK(brute_sparse(Graph(1), 1, -5).sparse());
  CHECK_FALSE(brute_sparse(Graph(2), 1, -3).sparse());
  const auto cert = brute_sparse(Graph(3), Rational(1, 2), 0);
  CHECK(*cert.max_violation == Rational(-1));
  CHECK(cert.witness == VertexSet(3, {0, 1}));
}

TEST_CASE("brute_sparse rejects large graphs") {
  CHECK_THROWS_AS(brute_sparse(Graph(23), 1, 0), DomainError);
}

TEST_CASE("brute_partition_exists on small examples") {
  const auto c5 = brute_partition_exists(cycle(5), 1, -1, 1, -1);
  REQUIRE(c5.has_value());
  CHECK(c5->first.size() + c5->second.size() == 5);
  CHECK(brute_sparse(cycle(5).edge_subgraph(c5->first), 1, -1).sparse());
  CHECK(brute_sparse(cycle(5).edge_subgraph(c5->second), 1, -1).sparse());

  CHECK_FALSE(brute_partition_exists(complete_graph(4), 1, -1, 1, -2).has_value());
  CHECK(brute_partition_exists(complete_graph(4), 1, -1, 1, -1).has_value());
}

TEST_CASE("brute_partition_exists on the disconnected counterexample") {
  const Graph g = gen_counterexample_disconnected(1, 1, 5, 2);
  CHECK_FALSE(brute_partition_exists(g, 1, -1, 1, 1).has_value());
  CHECK_THROWS_AS(brute_partition_exists(complete_graph(7), 1, 0, 2, 0), DomainError);
}

TEST_CASE("check_matroid_axioms on hand-built set systems") {
  // Uniform matroid U(2,4).
  CHECK(check_matroid_axioms(4, [](std::uint32_t s) { return std::popcount(s) <= 2; }));
  // Not hereditary.
  CHECK_FALSE(check_matroid_axioms(3, [](std::uint32_t s) { return s != 1; }));
  // Hereditary, fails exchange: maximal sets {0} and {1,2}.
  CHECK_FALSE(check_matroid_axioms(3, [](std::uint32_t s) {
    return s == 0 || s == 1 || s == 2 || s == 4 || s == 6;
  }));
  CHECK_THROWS_AS(check_matroid_axioms(13, [](std::uint32_t) { return true; }),
                  DomainError);
}

TEST_CASE("check_matroid_axioms on count matroids") {
  CHECK(check_matroid_axioms(make_oracle(complete_graph(4), 1, -1)));
  CHECK(check_matroid_axioms(make_oracle(complete_graph(5), 2, -3)));
}

TEST_CASE("a whole-set count is not a matroid") {
  const Graph host = complete_graph(5);
  const bool ok = check_matroid_axioms(host.num_edges(), [&](std::uint32_t mask) {
    std::vector<EdgeId> ids;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      ids.push_back(std::countr_zero(rest));
    }
    const EdgeSet s(host, ids);
    const int v = spanned_vertices(host, s).size();
    return s.size() <= v - 1 || s.empty();
  });
  CHECK_FALSE(ok);
}

TEST_CASE("enumerate_graphs matches the isomorphism class counts") {
  const int expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 0; n <= 7; ++n) {
    CHECK(enumerate_graphs(n).size() == static_cast<std::size_t>(expected[n]));
  }
}

TEST_CASE("canonical_code is a relabelling invariant") {
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
  const Graph h(6, {{5, 4}, {4, 3}, {3, 2}, {5, 2}, {2, 0}});
  CHECK(canonical_code(g) == canonical_code(h));
  const Graph path(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(canonical_code(g) != canonical_code(path));
}
