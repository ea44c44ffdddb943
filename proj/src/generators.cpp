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

#include "sforge/generators.hpp"

#include <random>
#include <string>

#include "sforge/error.hpp"

namespace sforge {

Graph complete_graph(int t) {
  if (t < 1) throw DomainError("complete_graph needs t >= 1");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(t) * (t - 1) / 2);
  for (Vertex u = 0; u < t; ++u) {
    for (Vertex v = u + 1; v < t; ++v) edges.push_back({u, v});
  }
  return Graph(t, std::move(edges));
}

Graph circulant(int n, int radius) {
  if (radius < 0) throw DomainError("circulant radius must be nonnegative");
  if (n < 2 * radius + 1) {
    throw DomainError("circulant(" + std::to_string(n) + ", " +
                      std::to_string(radius) +
                      ") would need parallel edges; n must be >= 2r+1");
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (int d = 1; d <= radius; ++d) edges.push_back({i, (i + d) % n});
  }
  return Graph(n, std::move(edges));
}

Graph glue(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2) {
  if (v1 < 0 || v1 >= g1.num_vertices() || v2 < 0 || v2 >= g2.num_vertices()) {
    throw DomainError("glue vertex out of range");
  }
  const int n1 = g1.num_vertices();
  auto map2 = [&](Vertex x) -> Vertex {
    if (x == v2) return v1;
    return n1 + (x < v2 ? x : x - 1);
  };
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back({map2(e.u), map2(e.v)});
  // Graph's constructor rejects parallel edges, which cannot arise here.
  return Graph(n1 + g2.num_vertices() - 1, std::move(edges));
}

Graph disjoint_copies(const Graph& g, int copies) {
  if (copies < 0) throw DomainError("negative copy count");
  const int n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(copies) * g.num_edges());
  for (int c = 0; c < copies; ++c) {
    for (const Edge& e : g.edges()) edges.push_back({e.u + c * n, e.v + c * n});
  }
  return Graph(n * copies, std::move(edges));
}

std::vector<std::vector<Vertex>> zigzag_hamiltonian_paths(int h) {
  if (h < 1) throw DomainError("zigzag paths need h >= 1");
  const int order = 2 * h;
  std::vector<std::vector<Vertex>> paths;
  for (int start = 0; start < h; ++start) {
    std::vector<Vertex> path = {start};
    for (int step = 1; step < order; ++step) {
      // Offsets +1, -1, +2, -2, ... from the start vertex.
      const int magnitude = (step + 1) / 2;
      const int offset = (step % 2 == 1) ? magnitude : -magnitude;
      path.push_back(((start + offset) % order + order) % order);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

Graph gen_counterexample_disconnected(int a1, int a2, int n, int t) {
  if (a1 < 1 || a2 < 1) throw DomainError("need a1, a2 >= 1");
  if (n < 2 * (a1 + a2) + 1) throw DomainError("need n >= 2(a1+a2)+1");
  if (t < 2) throw DomainError("need t >= 2 copies");
  return disjoint_copies(circulant(n, a1 + a2), t);
}

Graph gen_counterexample_glued_trees(int a) {
  if (a < 2) throw DomainError("glued-trees family needs a >= 2");
  const int order = 4 * a;
  std::vector<Edge> edges;
  for (const auto& path : zigzag_hamiltonian_paths(2 * a)) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      edges.push_back({path[i], path[i + 1]});
    }
  }
  const Graph h(order, std::move(edges));
  return glue(h, 0, h, 0);
}

Graph gen_counterexample_ring(int a, int t) {
  if (a < 1) throw DomainError("ring family needs a >= 1");
  if (t < a + 2) throw DomainError("ring family needs t >= a + 2");
  const int block = 2 * a + 2;  // order of H = K_{2a+2} - xy
  const int stride = block - 1;
  const int n = t * stride;
  // Local vertex 0 is x, local vertex block-1 is y.
  auto global = [&](int copy, int local) -> Vertex {
    if (local == block - 1) return ((copy + 1) % t) * stride;
    return copy * stride + local;
  };
  std::vector<Edge> edges;
  for (int c = 0; c < t; ++c) {
    for (int u = 0; u < block; ++u) {
      for (int v = u + 1; v < block; ++v) {
        if (u == 0 && v == block - 1) continue;
        edges.push_back({global(c, u), global(c, v)});
      }
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0) throw DomainError("random_graph needs n >= 0");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("random_graph needs 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace sforge
