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

#include "pebble_game.hpp"
#include "sforge/error.hpp"
#include "sforge/generators.hpp"
#include "sforge/matroid.hpp"
#include "sforge/oracle.hpp"

using namespace sforge;

namespace {

EdgeSet from_bits(const Graph& host, std::uint32_t mask) {
  std::vector<EdgeId> ids;
  for (; mask; mask &= mask - 1) ids.push_back(std::countr_zero(mask));
  return EdgeSet(host, ids);
}

bool brute_independent(const Graph& host, const EdgeSet& s, int a, int b) {
  if (s.empty()) return true;
  if (2 * a + b < 1) return false;
  return brute_sparse(host.edge_subgraph(s), a, b).sparse();
}

struct Regime {
  int a;
  int b;
};

constexpr Regime kRegimes[] = {{1, -2}, {1, -1}, {1, 0}, {1, 1}, {2, -4}, {2, -3},
                               {2, -2}, {2, -1}, {2, 0}, {2, 1}, {2, 3}};

}  // namespace

TEST_CASE("construction enforces the matroid regimes") {
  CHECK_THROWS_AS(make_oracle(complete_graph(4), 1, -3), DomainError);
  CHECK_THROWS_AS(make_oracle(complete_graph(4), 0, 0), DomainError);
  CHECK(make_oracle(complete_graph(4), 1, -1).regime() == MatroidRegime::kLorea);
  CHECK(make_oracle(complete_graph(4), 1, 1).regime() == MatroidRegime::kWhiteWhiteley);
}

TEST_CASE("graphic and bicircular matroids of K4") {
  const Graph k4 = complete_graph(4);
  const auto graphic = make_oracle(k4, 1, -1);
  CHECK(graphic.is_independent(EdgeSet(k4, {0, 1, 2})));
  CHECK_FALSE(graphic.is_independent(EdgeSet::all(k4)));
  CHECK(graphic.is_independent(EdgeSet::none(k4)));
  CHECK(graphic.rank(EdgeSet::all(k4)) == 3);
  CHECK(graphic.rank(EdgeSet::none(k4)) == 0);
  const auto bicircular = make_oracle(k4, 1, 0);
  CHECK(bicircular.rank(EdgeSet::all(k4)) == 4);
  CHECK_THROWS_AS(graphic.is_independent(EdgeSet(complete_graph(5), {9})), DomainError);
}

TEST_CASE("axioms hold on K4 and K5 in every regime") {
  for (const Regime r : {Regime{1, -1}, Regime{1, 0}, Regime{2, -2}, Regime{2, -3},
                         Regime{1, 1}}) {
    CAPTURE(r.a);
    CAPTURE(r.b);
    CHECK(check_matroid_axioms(make_oracle(complete_graph(4), r.a, r.b)));
    CHECK(check_matroid_axioms(make_oracle(complete_graph(5), r.a, r.b)));
  }
}

TEST_CASE("is_independent agrees with brute force over the power set") {
  const Graph host = random_graph(7, 0.45, 12);
  REQUIRE(host.num_edges() <= 12);
  for (const Regime r : kRegimes) {
    const auto oracle = make_oracle(host, r.a, r.b);
    for (std::uint32_t mask = 0; mask < (1u << host.num_edges()); mask += 7) {
      const EdgeSet s = from_bits(host, mask);
      CHECK(oracle.is_independent(s) == brute_independent(host, s, r.a, r.b));
    }
  }
}

TEST_CASE("incremental sets agree with the oracle and report circuits") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph host = random_graph(6 + trial % 4, 0.6, rng());
    for (const Regime r : kRegimes) {
      const auto oracle = make_oracle(host, r.a, r.b);
      IndependentSet set = oracle.empty_set();
      for (int step = 0; step < 3 * host.num_edges(); ++step) {
        const EdgeId e = static_cast<EdgeId>(rng() % host.num_edges());
        if (set.contains(e)) {
          if (rng() % 3 == 0) set.remove(e);
          continue;
        }
        auto with = set.members().mask();
        with[e] = true;
        const bool expect = oracle.is_independent(EdgeSet::from_mask(host, with));
        const auto circuit = set.circuit_with(e);
        REQUIRE(circuit.has_value() == !expect);
        if (expect) {
          CHECK(set.can_add(e));
          set.add(e);
          continue;
        }
        CHECK_FALSE(set.can_add(e));
        // A circuit: dependent, and every element's removal makes it
        // independent.
        std::vector<EdgeId> ids = *circuit;
        ids.push_back(e);
        const EdgeSet c(host, ids);
        CHECK_FALSE(oracle.is_independent(c));
        for (EdgeId f : c) {
          auto mask = c.mask();
          mask[f] = false;
          CHECK(oracle.is_independent(EdgeSet::from_mask(host, mask)));
        }
      }
      CHECK(oracle.is_independent(set.members()));
    }
  }
}

TEST_CASE("rank is monotone and submodular") {
  const Graph host = random_graph(6, 0.7, 4);
  REQUIRE(host.num_edges() <= 12);
  const int full = 1 << host.num_edges();
  for (const Regime r : {Regime{1, -1}, Regime{1, 0}, Regime{2, -3}, Regime{1, 1}}) {
    const auto oracle = make_oracle(host, r.a, r.b);
    std::vector<int> rank(full);
    for (int s = 0; s < full; ++s) rank[s] = oracle.rank(from_bits(host, s));
    for (int x = 0; x < full; x += 3) {
      for (int y = 0; y < full; y += 5) {
        CHECK(rank[x | y] + rank[x & y] <= rank[x] + rank[y]);
        if ((x & y) == x) CHECK(rank[x] <= rank[y]);
      }
    }
  }
}

TEST_CASE("greedy basis is independent and maximal") {
  const Graph host = complete_graph(6);
  const auto oracle = make_oracle(host, 2, -3);
  const EdgeSet basis = oracle.greedy_basis(EdgeSet::all(host));
  CHECK(basis.size() == 9);
  CHECK(oracle.is_independent(basis));
}

TEST_CASE("tight components") {
  const Graph host(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {0, 3}});
  const auto oracle = make_oracle(host, 1, -1);
  const auto tree = oracle.find_tight_components(EdgeSet(host, {0, 1, 2}));
  REQUIRE(tree.size() == 1);
  CHECK(tree[0] == VertexSet(host, {0, 1, 2, 3}));
  const auto two = oracle.find_tight_components(EdgeSet(host, {0, 2, 4, 5}));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == VertexSet(host, {0, 1, 2}));
  CHECK(two[1] == VertexSet(host, {4, 5, 6}));
  CHECK_THROWS_AS(oracle.find_tight_components(EdgeSet::all(host)), DomainError);
  CHECK_THROWS_AS(make_oracle(host, 1, 1).find_tight_components(EdgeSet::none(host)),
                  DomainError);
  CHECK_THROWS_AS(make_oracle(host, 1, -2).find_tight_components(EdgeSet::none(host)),
                  DomainError);
}

TEST_CASE("tight components are disjoint and not mergeable") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph host = random_graph(9, 0.5, rng());
    for (const Regime r : {Regime{1, -1}, Regime{1, 0}, Regime{2, -2}, Regime{2, -1}}) {
      const auto oracle = make_oracle(host, r.a, r.b);
      const EdgeSet basis = oracle.greedy_basis(EdgeSet::all(host));
      const auto comps = oracle.find_tight_components(basis);
      const Graph sub = host.edge_subgraph(basis);
      std::vector<int> owner(host.num_vertices(), -1);
      for (std::size_t i = 0; i < comps.size(); ++i) {
        CHECK(sub.count_edges_within(comps[i]) == r.a * comps[i].size() + r.b);
        for (Vertex v : comps[i]) {
          CHECK(owner[v] == -1);
          owner[v] = static_cast<int>(i);
        }
      }
      // Every edge of the basis lies in a tight set containing it; it must
      // sit inside one reported component.
      for (EdgeId e : basis) {
        const auto through = max_violation_through(sub, host.edge(e).u, host.edge(e).v, r.a);
        if (through.value == Rational(r.b)) {
          CHECK(owner[host.edge(e).u] >= 0);
          CHECK(owner[host.edge(e).u] == owner[host.edge(e).v]);
        }
      }
    }
  }
}

TEST_CASE("pebble game rejects unsupported parameters") {
  const Graph k3 = complete_graph(3);
  CHECK_THROWS_AS(detail::PebbleGame(k3, 1, 2), DomainError);
  detail::PebbleGame game(k3, 1, 1);
  CHECK(game.try_gather(0));
  game.insert(0);
  CHECK_THROWS_AS(game.insert(0), DomainError);
  game.insert(1);
  CHECK_FALSE(game.try_gather(2));
  CHECK(game.blocking_edges(2) == std::vector<EdgeId>{0, 1});
  game.erase(0);
  CHECK(game.try_gather(2));
  CHECK_THROWS_AS(game.erase(0), DomainError);
}
