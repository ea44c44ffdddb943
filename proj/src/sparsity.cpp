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

#include "sforge/sparsity.hpp"

#include <array>
#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "density_network.hpp"
#include "sforge/error.hpp"

namespace sforge {

SparsityParams::SparsityParams(Rational a, Rational b)
    : a_(std::move(a)), b_(std::move(b)) {
  if (a_ <= 0) throw DomainError("sparsity needs a > 0, got " + to_string(a_));
}

Rational potential(const Graph& g, const VertexSet& u, const Rational& a) {
  if (u.empty()) throw DomainError("potential of the empty vertex set");
  return a * u.size() - g.count_edges_within(u);
}

namespace {

Rational scaled(std::int64_t value, std::int64_t q) { return Rational(value, q); }

}  // namespace

std::optional<Violation> max_violation(const Graph& g, const Rational& a) {
  const int n = g.num_vertices();
  if (n < 2) return std::nullopt;
  if (a <= 0) throw DomainError("max_violation needs a > 0");
  if (g.num_edges() == 0) {
    return Violation{-2 * a, VertexSet(g, {0, 1})};
  }
  const std::int64_t p = a.numerator();
  const std::int64_t q = a.denominator();
  detail::DensityNetwork network(g, p, q);

  auto global = network.solve({});
  if (global.value > 0) {
    return Violation{scaled(global.value, q),
                     VertexSet(g, std::move(global.minimal_set))};
  }

  // The maximum is <= 0, so it may be attained only by sets the unforced
  // cut ignores in favour of the empty set. Every optimal set with two or
  // more vertices contains an edge, so pin each edge in turn.
  std::optional<detail::DensityNetwork::Cut> best;
  for (const Edge& e : g.edges()) {
    const std::array<Vertex, 2> forced = {e.u, e.v};
    auto cut = network.solve(forced);
    if (!best || cut.value > best->value) best = std::move(cut);
  }
  return Violation{scaled(best->value, q),
                   VertexSet(g, std::move(best->minimal_set))};
}

Violation max_violation_through(const Graph& g, Vertex x, Vertex y,
                                const Rational& a) {
  if (x == y || x < 0 || y < 0 || x >= g.num_vertices() ||
      y >= g.num_vertices()) {
    throw DomainError("max_violation_through needs two distinct vertices");
  }
  if (a <= 0) throw DomainError("max_violation_through needs a > 0");
  detail::DensityNetwork network(g, a.numerator(), a.denominator());
  const std::array<Vertex, 2> forced = {x, y};
  auto cut = network.solve(forced);
  return Violation{scaled(cut.value, a.denominator()),
                   VertexSet(g, std::move(cut.minimal_set))};
}

SparsityCertificate is_sparse(const Graph& g, const SparsityParams& params) {
  if (params.pathological()) {
    throw DomainError("pathological sparsity parameters (2a + b < 1): a=" +
                      to_string(params.a()) + ", b=" + to_string(params.b()));
  }
  SparsityCertificate cert{Verdict::kSparse, params, VertexSet(g, {}),
                           std::nullopt, std::nullopt};
  auto viol = max_violation(g, params.a());
  if (!viol) return cert;
  cert.max_violation = viol->value - params.b();
  cert.min_potential = -viol->value;
  cert.witness = std::move(viol->witness);
  cert.verdict = *cert.max_violation <= 0 ? Verdict::kSparse : Verdict::kNotSparse;
  return cert;
}

bool is_tight(const Graph& g, const SparsityParams& params) {
  if (!is_sparse(g, params).sparse()) return false;
  return Rational(g.num_edges()) == params.a() * g.num_vertices() + params.b();
}

Rational m_of(const Graph& g) {
  if (g.num_edges() == 0) throw DomainError("m(G) needs at least one edge");
  // Dinkelbach iteration: each step jumps to the density of the current
  // maximizer, which strictly increases until no set beats it.
  Rational density(g.num_edges(), g.num_vertices());
  while (true) {
    detail::DensityNetwork network(g, density.numerator(), density.denominator());
    const auto cut = network.solve({});
    if (cut.value <= 0) return density;
    const VertexSet u(g, cut.minimal_set);
    density = Rational(g.count_edges_within(u), u.size());
  }
}

Rational m2_of(const Graph& g) {
  if (g.num_vertices() < 3) throw DomainError("m2(G) needs at least 3 vertices");
  int max_degree = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    max_degree = std::max(max_degree, g.degree(v));
  }
  if (max_degree <= 1) {
    // A matching: two of its edges give 1/2, one edge and a vertex give 0,
    // and without edges all n vertices give -1/(n-2).
    if (g.num_edges() >= 2) return Rational(1, 2);
    if (g.num_edges() == 1) return Rational(0);
    return Rational(-1, g.num_vertices() - 2);
  }
  // A path on three vertices attains 1; iterate upward from there.
  Rational value(1);
  while (true) {
    const auto viol = max_violation(g, value);
    const Rational shifted = viol->value + 2 * value - 1;
    if (shifted <= 0) return value;
    // A pair contributes at most 0 to the shifted objective, so the
    // witness has at least three vertices.
    const int e = g.count_edges_within(viol->witness);
    value = Rational(e - 1, viol->witness.size() - 2);
  }
}

Rational m2_pair(const Graph& h1, const Graph& h2) {
  const Rational m2 = m2_of(h2);
  if (m2 <= 0) throw DomainError("m2_pair needs m2(h2) > 0");
  const int n = h1.num_vertices();
  if (n > 20) throw DomainError("m2_pair enumerates subsets; needs v(h1) <= 20");
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : h1.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::optional<Rational> best;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int twice_edges = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      twice_edges += std::popcount(adj[std::countr_zero(rest)] & mask);
    }
    if (twice_edges == 0) continue;
    const int v = std::popcount(mask);
    const Rational value = Rational(twice_edges / 2) / (Rational(v - 2) + 1 / m2);
    if (!best || value > *best) best = value;
  }
  if (!best) throw DomainError("m2_pair needs h1 to have an edge");
  return *best;
}

std::int64_t forest_slack(std::int64_t k, const Rational& eps) {
  if (k < 1) throw DomainError("forest_slack needs k >= 1");
  if (eps < 0 || eps >= 1) throw DomainError("forest_slack needs 0 <= eps < 1");
  if (eps * (2 * k + 2) < 2) return 2 * k;
  if (eps >= Rational(2, 2 * k + 2) && eps < Rational(1, 2)) {
    return ceil_of((2 * k + 2) * (1 - eps));
  }
  if (eps >= Rational(1, 2) && eps < Rational(k + 2, 2 * k + 3)) return k + 1;
  return ceil_of((2 * k + 3) * (1 - eps));
}

Graph random_sparse_graph(int n, int max_edges, const SparsityParams& params,
                          std::uint64_t seed) {
  if (params.pathological()) throw DomainError("random_sparse_graph: pathological params");
  if (n < 0 || max_edges < 0) throw DomainError("random_sparse_graph needs n, max_edges >= 0");
  std::vector<Edge> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  std::mt19937_64 rng(seed);
  std::shuffle(pairs.begin(), pairs.end(), rng);

  std::vector<Edge> kept;
  for (const Edge& e : pairs) {
    if (static_cast<int>(kept.size()) >= max_edges) break;
    kept.push_back(e);
    const Violation viol = max_violation_through(Graph(n, kept), e.u, e.v, params.a());
    if (viol.value > params.b()) kept.pop_back();
  }
  return Graph(n, std::move(kept));
}

Graph greedy_sparse_subgraph(const Graph& g, const SparsityParams& params,
                             std::uint64_t seed) {
  if (params.pathological()) throw DomainError("greedy_sparse_subgraph: pathological params");
  std::vector<EdgeId> order(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) order[id] = id;
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<Edge> kept;
  std::vector<bool> keep(g.num_edges(), false);
  for (EdgeId id : order) {
    const Edge& e = g.edge(id);
    kept.push_back(e);
    const Violation viol =
        max_violation_through(Graph(g.num_vertices(), kept), e.u, e.v, params.a());
    if (viol.value > params.b()) {
      kept.pop_back();
    } else {
      keep[id] = true;
    }
  }
  return g.edge_subgraph(EdgeSet::from_mask(g, keep));
}

}  // namespace sforge
