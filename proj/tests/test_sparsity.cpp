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
#include <random>

#include "sforge/error.hpp"
#include "sforge/generators.hpp"
#include "sforge/oracle.hpp"
#include "sforge/sparsity.hpp"

using namespace sforge;

namespace {

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, edges);
}

// Reference densities by subset enumeration.
Rational brute_density(const Graph& g, int min_size, int edge_shift, int vertex_shift) {
  std::optional<Rational> best;
  const int n = g.num_vertices();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < min_size) continue;
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) vs.push_back(v);
    }
    const int e = g.count_edges_within(VertexSet(g, vs));
    const Rational value(e - edge_shift, size - vertex_shift);
    if (!best || value > *best) best = value;
  }
  return *best;
}

}  // namespace

TEST_CASE("potential") {
  const Graph k4 = complete_graph(4);
  CHECK(potential(k4, VertexSet(k4, {0, 1, 2}), 2) == Rational(3));
  CHECK_THROWS_AS(potential(k4, VertexSet(k4, {}), 2), DomainError);
}

TEST_CASE("is_sparse agrees with brute force on random inputs") {
  std::mt19937_64 rng(2024);
  const Rational as[] = {Rational(1, 2), Rational(1), Rational(6, 5), Rational(3, 2),
                         Rational(2), Rational(7, 3), Rational(5, 2), Rational(3)};
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Graph g = random_graph(n, 0.2 + 0.7 * (rng() % 100) / 100.0, rng());
    const Rational a = as[rng() % 8];
    const Rational b = Rational(static_cast<int>(rng() % 9) - 4, 1 + rng() % 2);
    const SparsityParams params(a, b);
    if (params.pathological()) {
      CHECK_THROWS_AS(is_sparse(g, params), DomainError);
      continue;
    }
    const auto fast = is_sparse(g, params);
    const auto slow = brute_sparse(g, a, b);
    CHECK(fast.verdict == slow.verdict);
    CHECK(*fast.max_violation == *slow.max_violation);
    CHECK(*fast.min_potential == *slow.min_potential);
    CHECK(potential(g, fast.witness, a) == *fast.min_potential);
    CHECK(fast.witness.size() >= 2);
  }
}

TEST_CASE("positive violations come with the minimal maximizer") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, 0.6, rng());
    const auto viol = max_violation(g, 1);
    REQUIRE(viol.has_value());
    if (viol->value <= 0) continue;
    // No proper subset of the witness with two or more vertices attains it.
    const auto w = std::vector<Vertex>(viol->witness.begin(), viol->witness.end());
    for (std::uint32_t mask = 1; mask + 1 < (1u << w.size()); ++mask) {
      if (std::popcount(mask) < 2) continue;
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask >> i & 1) sub.push_back(w[i]);
      }
      CHECK(g.count_edges_within(VertexSet(g, sub)) - static_cast<int>(sub.size()) <
            viol->value);
    }
  }
}

TEST_CASE("small cases of max_violation") {
  CHECK_FALSE(max_violation(Graph(1), 1).has_value());
  const auto empty = max_violation(Graph(4), 2);
  CHECK(empty->value == Rational(-4));
  CHECK(empty->witness == VertexSet(4, {0, 1}));
  CHECK(is_sparse(Graph(1), SparsityParams(1, -1)).sparse());
  CHECK_FALSE(is_sparse(Graph(1), SparsityParams(1, -1)).max_violation.has_value());
  CHECK_THROWS_AS(is_sparse(complete_graph(3), SparsityParams(1, -2)), DomainError);
  CHECK_THROWS_AS(SparsityParams(0, 1), DomainError);
}

TEST_CASE("max_violation_through") {
  const Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto through = max_violation_through(g, 0, 1, 1);
  CHECK(through.value == Rational(0));
  CHECK(through.witness == VertexSet(g, {0, 1, 2}));
  const auto apart = max_violation_through(g, 0, 3, 1);
  CHECK(apart.value == Rational(-1));
  CHECK_THROWS_AS(max_violation_through(g, 2, 2, 1), DomainError);
}

TEST_CASE("tightness") {
  Graph k4_minus(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(is_tight(k4_minus, SparsityParams(2, -3)));
  CHECK(is_tight(cycle(5), SparsityParams(1, 0)));
  CHECK_FALSE(is_tight(cycle(5), SparsityParams(1, 1)));
  CHECK_FALSE(is_tight(complete_graph(4), SparsityParams(1, -1)));
}

TEST_CASE("m_of and m2_of match enumeration") {
  CHECK(m_of(complete_graph(5)) == Rational(2));
  CHECK(m2_of(complete_graph(5)) == Rational(3, 1));
  CHECK(m2_of(cycle(5)) == Rational(4, 3));
  CHECK(m2_of(Graph(4, {{0, 1}, {2, 3}})) == Rational(1, 2));
  CHECK(m2_of(Graph(3, {{0, 1}})) == Rational(0));
  CHECK(m2_of(Graph(3)) == Rational(-1));
  CHECK(m2_of(Graph(6)) == Rational(-1, 4));
  CHECK_THROWS_AS(m_of(Graph(3)), DomainError);
  CHECK_THROWS_AS(m2_of(Graph(2, {{0, 1}})), DomainError);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, (rng() % 100) / 100.0, rng());
    if (g.num_edges() > 0) CHECK(m_of(g) == brute_density(g, 1, 0, 0));
    CHECK(m2_of(g) == brute_density(g, 3, 1, 2));
  }
}

TEST_CASE("m2_pair") {
  // Both K3: max e/(v - 2 + 1/2) is the triangle itself, 3/1.5.
  CHECK(m2_pair(complete_graph(3), complete_graph(3)) == Rational(2));
  CHECK(m2_pair(complete_graph(4), cycle(5)) == Rational(24, 11));
  CHECK_THROWS_AS(m2_pair(complete_graph(3), Graph(3, {{0, 1}})), DomainError);
}

TEST_CASE("forest_slack cases") {
  CHECK(forest_slack(2, 0) == 4);
  CHECK(forest_slack(1, 0) == 2);
  CHECK(forest_slack(2, Rational(1, 3)) == 4);
  CHECK(forest_slack(2, Rational(1, 2)) == 3);
  CHECK(forest_slack(2, Rational(4, 5)) == 2);
  CHECK(forest_slack(3, Rational(3, 4) + Rational(1, 100)) == 3);
  CHECK_THROWS_AS(forest_slack(0, 0), DomainError);
  CHECK_THROWS_AS(forest_slack(2, 1), DomainError);
}

TEST_CASE("random sparse graphs are sparse and seeded") {
  const SparsityParams params(Rational(5, 2), 0);
  const Graph g = random_sparse_graph(30, 1000, params, 17);
  CHECK(is_sparse(g, params).sparse());
  CHECK(brute_sparse(random_sparse_graph(14, 1000, params, 3), Rational(5, 2), 0).sparse());
  CHECK(g == random_sparse_graph(30, 1000, params, 17));
  CHECK(random_sparse_graph(30, 10, params, 17).num_edges() == 10);
}
