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


#include "sforge/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "sforge/error.hpp"
#include "sforge/matroid.hpp"

namespace sforge {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint64_t{1} << e.v;
    adj[e.v] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

SparsityCertificate brute_sparse(const Graph& g, const Rational& a, const Rational& b) {
  const SparsityParams params(a, b);
  const int n = g.num_vertices();
  if (n > kBruteSparseMaxVertices) {
    throw DomainError("brute_sparse needs at most " +
                      std::to_string(kBruteSparseMaxVertices) + " vertices");
  }
  SparsityCertificate cert{Verdict::kSparse, params, VertexSet(g, {}), std::nullopt,
                           std::nullopt};
  if (n < 2) return cert;

  const auto adj = adjacency_masks(g);
  const std::int64_t p = a.numerator();
  const std::int64_t q = a.denominator();
  std::uint64_t mask = 0;
  std::int64_t edges = 0;
  int size = 0;
  std::optional<std::int64_t> best;
  std::uint64_t best_mask = 0;
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
    const int v = std::countr_zero(i);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (mask & bit) {
      mask ^= bit;
      edges -= std::popcount(adj[v] & mask);
      --size;
    } else {
      edges += std::popcount(adj[v] & mask);
      mask ^= bit;
      ++size;
    }
    if (size < 2) continue;
    const std::int64_t scaled = q * edges - p * size;
    const bool better =
        !best || scaled > *best ||
        (scaled == *best &&
         (size < std::popcount(best_mask) ||
          (size == std::popcount(best_mask) && mask < best_mask)));
    if (better) {
      best = scaled;
      best_mask = mask;
    }
  }
  const Rational value(*best, q);
  cert.witness = VertexSet(g, mask_vertices(best_mask));
  cert.max_violation = value - b;
  cert.min_potential = -value;
  cert.verdict = *cert.max_violation <= 0 ? Verdict::kSparse : Verdict::kNotSparse;
  return cert;
}

namespace {

constexpr int kMaxSearchVertices = 24;

// Edge budget floor(a*k + b) for k-vertex sets, k = 0..n.
std::vector<std::int64_t> edge_budgets(int n, const Rational& a, const Rational& b) {
  std::vector<std::int64_t> out(n + 1);
  for (int k = 0; k <= n; ++k) out[k] = floor_of(a * k + b);
  return out;
}

class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::vector<std::int64_t> budget1,
                  std::vector<std::int64_t> budget2)
      : g_(g), colour_(g.num_edges(), -1) {
    budget_[0] = std::move(budget1);
    budget_[1] = std::move(budget2);
    adj_[0].assign(g.num_vertices(), 0);
    adj_[1].assign(g.num_vertices(), 0);
  }

  bool run(EdgeId next) {
    if (next == g_.num_edges()) return true;
    const Edge& e = g_.edge(next);
    for (int side = 0; side < 2; ++side) {
      toggle(side, e);
      colour_[next] = side;
      if (still_sparse(side, e) && run(next + 1)) return true;
      toggle(side, e);
      colour_[next] = -1;
    }
    return false;
  }

  const std::vector<int>& colours() const { return colour_; }

 private:
  void toggle(int side, const Edge& e) {
    const std::uint64_t bu = std::uint64_t{1} << e.u;
    const std::uint64_t bv = std::uint64_t{1} << e.v;
    adj_[side][e.u] ^= bv;
    adj_[side][e.v] ^= bu;
  }

  // Only sets containing both endpoints of the new edge can have become
  // violated; extra vertices without edges on this side never help.
  bool still_sparse(int side, const Edge& e) const {
    const auto& adj = adj_[side];
    const auto& budget = budget_[side];
    std::uint64_t others = 0;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (adj[v] != 0) others |= std::uint64_t{1} << v;
    }
    others &= ~((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
    const std::vector<Vertex> pool = mask_vertices(others);
    if (static_cast<int>(pool.size()) > kMaxSearchVertices) {
      throw DomainError("brute_partition_exists: too many vertices to search");
    }
    std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    std::int64_t edges = 1;
    int size = 2;
    if (edges > budget[size]) return false;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << pool.size()); ++i) {
      const Vertex v = pool[std::countr_zero(i)];
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (mask & bit) {
        mask ^= bit;
        edges -= std::popcount(adj[v] & mask);
        --size;
      } else {
        edges += std::popcount(adj[v] & mask);
        mask ^= bit;
        ++size;
      }
      if (edges > budget[size]) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<std::int64_t> budget_[2];
  std::vector<std::uint64_t> adj_[2];
  std::vector<int> colour_;
};

}  // namespace

std::optional<PartitionWitness> brute_partition_exists(
    const Graph& g, const Rational& a1, const Rational& b1, const Rational& a2,
    const Rational& b2) {
  if (a1 <= 0 || a2 <= 0) throw DomainError("brute_partition_exists needs a1, a2 > 0");
  if (g.num_edges() > kBrutePartitionMaxEdges) {
    throw DomainError("brute_partition_exists needs at most " +
                      std::to_string(kBrutePartitionMaxEdges) + " edges");
  }
  if (g.num_vertices() > 64) {
    throw DomainError("brute_partition_exists needs at most 64 vertices");
  }
  const int n = g.num_vertices();
  PartitionSearch search(g, edge_budgets(n, a1, b1), edge_budgets(n, a2, b2));
  if (!search.run(0)) return std::nullopt;
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    (search.colours()[e] == 0 ? first : second).push_back(e);
  }
  return PartitionWitness{EdgeSet(g, std::move(first)), EdgeSet(g, std::move(second))};
}

bool check_matroid_axioms(int ground_size, const IndependencePredicate& independent) {
  if (ground_size < 0 || ground_size > kAxiomCheckMaxEdges) {
    throw DomainError("check_matroid_axioms needs a ground set of at most " +
                      std::to_string(kAxiomCheckMaxEdges) + " elements");
  }
  const std::uint32_t full = (std::uint32_t{1} << ground_size) - 1;
  std::vector<char> ind(full + 1);
  for (std::uint32_t s = 0; s <= full; ++s) ind[s] = independent(s) ? 1 : 0;
  if (!ind[0]) return false;

  std::vector<std::vector<std::uint32_t>> by_size(ground_size + 1);
  std::vector<std::uint32_t> extensions(full + 1, 0);
  for (std::uint32_t s = 0; s <= full; ++s) {
    if (!ind[s]) continue;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      if (!ind[s & ~(rest & -rest)]) return false;
    }
    for (std::uint32_t rest = full & ~s; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & -rest;
      if (ind[s | bit]) extensions[s] |= bit;
    }
    by_size[std::popcount(s)].push_back(s);
  }
  // With heredity, exchange for |B| = |A| + 1 implies it for all |B| > |A|.
  for (int k = 0; k < ground_size; ++k) {
    for (std::uint32_t a : by_size[k]) {
      for (std::uint32_t b : by_size[k + 1]) {
        if ((b & ~a & extensions[a]) == 0) return false;
      }
    }
  }
  return true;
}

bool check_matroid_axioms(const CountMatroidOracle& oracle) {
  const Graph& host = oracle.host();
  return check_matroid_axioms(host.num_edges(), [&](std::uint32_t mask) {
    std::vector<EdgeId> ids;
    for (; mask; mask &= mask - 1) ids.push_back(std::countr_zero(mask));
    return oracle.is_independent(EdgeSet(host, std::move(ids)));
  });
}

namespace {

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

using Adjacency = std::vector<std::uint32_t>;

// Isomorphism-invariant ordered colouring by iterated neighbour counts.
std::vector<int> refine_colours(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n, 0);
  int classes = 1;
  while (true) {
    std::vector<std::pair<std::vector<int>, Vertex>> signatures(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> sig{colour[v]};
      std::vector<int> counts(classes, 0);
      for (std::uint32_t rest = adj[v]; rest; rest &= rest - 1) {
        ++counts[colour[std::countr_zero(rest)]];
      }
      sig.insert(sig.end(), counts.begin(), counts.end());
      signatures[v] = {std::move(sig), v};
    }
    std::sort(signatures.begin(), signatures.end());
    std::vector<int> next(n);
    int id = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && signatures[i].first != signatures[i - 1].first) ++id;
      next[signatures[i].second] = id;
    }
    const int next_classes = n == 0 ? 0 : id + 1;
    colour = std::move(next);
    if (next_classes == classes || n == 0) return colour;
    classes = next_classes;
  }
}

std::uint32_t code_under(const Adjacency& adj, const std::vector<int>& label) {
  std::uint32_t code = 0;
  const int n = static_cast<int>(adj.size());
  for (Vertex u = 0; u < n; ++u) {
    for (std::uint32_t rest = adj[u] & ~((std::uint32_t{2} << u) - 1); rest;
         rest &= rest - 1) {
      const Vertex v = std::countr_zero(rest);
      const int x = std::min(label[u], label[v]);
      const int y = std::max(label[u], label[v]);
      code |= std::uint32_t{1} << pair_index(x, y);
    }
  }
  return code;
}

std::uint32_t canonical_code_of(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  const std::vector<int> colour = refine_colours(adj);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return colour[x] < colour[y]; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = ~std::uint32_t{0};
  std::vector<int> label(n);
  // Odometer over the permutations of every cell.
  while (true) {
    for (int i = 0; i < n; ++i) label[order[i]] = i;
    best = std::min(best, code_under(adj, label));
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto first = order.begin() + cells[c].first;
      auto last = order.begin() + cells[c].second;
      if (std::next_permutation(first, last)) break;
    }
    if (c == cells.size()) return n == 0 ? 0 : best;
  }
}

Adjacency adjacency_of(const Graph& g) {
  Adjacency adj(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

Graph decode(int n, std::uint32_t code) {
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (code >> pair_index(i, j) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace

std::uint32_t canonical_code(const Graph& g) {
  if (g.num_vertices() > kEnumerateMaxVertices) {
    throw DomainError("canonical_code needs at most " +
                      std::to_string(kEnumerateMaxVertices) + " vertices");
  }
  return canonical_code_of(adjacency_of(g));
}

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kEnumerateMaxVertices) {
    throw DomainError("enumerate_graphs needs 0 <= n <= " +
                      std::to_string(kEnumerateMaxVertices));
  }
  std::vector<std::uint32_t> codes = {0};
  for (int size = 1; size <= n; ++size) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t code : codes) {
      Adjacency base = adjacency_of(decode(size - 1, code));
      base.push_back(0);
      const Vertex v = size - 1;
      for (std::uint32_t nbrs = 0; nbrs < (std::uint32_t{1} << v); ++nbrs) {
        Adjacency adj = base;
        adj[v] = nbrs;
        for (std::uint32_t rest = nbrs; rest; rest &= rest - 1) {
          adj[std::countr_zero(rest)] |= std::uint32_t{1} << v;
        }
        next.push_back(canonical_code_of(adj));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    codes = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (std::uint32_t code : codes) out.push_back(decode(n, code));
  return out;
}

}  // namespace sforge
