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

#include "sforge/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sforge/error.hpp"
#include "sforge/union_find.hpp"

namespace sforge {

Graph::Graph(int num_vertices) : Graph(num_vertices, {}) {}

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  if (num_vertices_ < 0) throw DomainError("negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) {
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 0 || e.v < 0 || e.u >= num_vertices_ || e.v >= num_vertices_) {
      throw DomainError("edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw DomainError("parallel edge " + std::to_string(dup->u) + "-" +
                      std::to_string(dup->v));
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  offsets_.assign(num_vertices_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidences_.resize(2 * edges_.size());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    incidences_[fill[edges_[id].u]++] = {edges_[id].v, id};
    incidences_[fill[edges_[id].v]++] = {edges_[id].u, id};
  }
  for (Vertex v = 0; v < num_vertices_; ++v) {
    std::sort(incidences_.begin() + offsets_[v],
              incidences_.begin() + offsets_[v + 1],
              [](const Incidence& a, const Incidence& b) {
                return a.neighbor < b.neighbor;
              });
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= num_vertices_ || b >= num_vertices_) {
    return std::nullopt;
  }
  const auto adj = neighbors(a);
  const auto it = std::lower_bound(
      adj.begin(), adj.end(), b,
      [](const Incidence& inc, Vertex x) { return inc.neighbor < x; });
  if (it == adj.end() || it->neighbor != b) return std::nullopt;
  return it->edge;
}

Graph Graph::edge_subgraph(const EdgeSet& subset) const {
  std::vector<Edge> kept;
  kept.reserve(subset.size());
  for (EdgeId id : subset) kept.push_back(edges_[id]);
  return Graph(num_vertices_, std::move(kept));
}

int Graph::count_edges_within(const VertexSet& vertices) const {
  const std::vector<bool> in = vertices.mask();
  int count = 0;
  for (Vertex v : vertices) {
    for (const Incidence& inc : neighbors(v)) {
      if (inc.neighbor > v && in[inc.neighbor]) ++count;
    }
  }
  return count;
}

EdgeSet::EdgeSet(const Graph& host, std::vector<EdgeId> ids)
    : host_edge_count_(host.num_edges()), ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  if (!ids_.empty() && (ids_.front() < 0 || ids_.back() >= host_edge_count_)) {
    throw DomainError("edge id outside the host graph");
  }
}

EdgeSet EdgeSet::all(const Graph& host) {
  std::vector<EdgeId> ids(host.num_edges());
  std::iota(ids.begin(), ids.end(), 0);
  return EdgeSet(host, std::move(ids));
}

EdgeSet EdgeSet::none(const Graph& host) { return EdgeSet(host, {}); }

EdgeSet EdgeSet::from_mask(const Graph& host, const std::vector<bool>& mask) {
  std::vector<EdgeId> ids;
  for (EdgeId id = 0; id < static_cast<EdgeId>(mask.size()); ++id) {
    if (mask[id]) ids.push_back(id);
  }
  return EdgeSet(host, std::move(ids));
}

bool EdgeSet::contains(EdgeId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::vector<bool> EdgeSet::mask() const {
  std::vector<bool> m(host_edge_count_, false);
  for (EdgeId id : ids_) m[id] = true;
  return m;
}

VertexSet::VertexSet(int host_vertex_count, std::vector<Vertex> vertices)
    : host_vertex_count_(host_vertex_count), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                  vertices_.end());
  if (!vertices_.empty() &&
      (vertices_.front() < 0 || vertices_.back() >= host_vertex_count_)) {
    throw DomainError("vertex outside the host graph");
  }
}

VertexSet VertexSet::all(const Graph& host) {
  std::vector<Vertex> vs(host.num_vertices());
  std::iota(vs.begin(), vs.end(), 0);
  return VertexSet(host, std::move(vs));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<bool> VertexSet::mask() const {
  std::vector<bool> m(host_vertex_count_, false);
  for (Vertex v : vertices_) m[v] = true;
  return m;
}

VertexSet spanned_vertices(const Graph& host, const EdgeSet& edges) {
  std::vector<Vertex> vs;
  vs.reserve(2 * edges.size());
  for (EdgeId id : edges) {
    vs.push_back(host.edge(id).u);
    vs.push_back(host.edge(id).v);
  }
  return VertexSet(host, std::move(vs));
}

EdgeSet induced_edges(const Graph& host, const VertexSet& vertices) {
  const std::vector<bool> in = vertices.mask();
  std::vector<EdgeId> ids;
  for (Vertex v : vertices) {
    for (const Incidence& inc : host.neighbors(v)) {
      if (inc.neighbor > v && in[inc.neighbor]) ids.push_back(inc.edge);
    }
  }
  return EdgeSet(host, std::move(ids));
}

bool is_forest(const Graph& host, const EdgeSet& edges) {
  UnionFind components(host.num_vertices());
  for (EdgeId id : edges) {
    if (!components.unite(host.edge(id).u, host.edge(id).v)) return false;
  }
  return true;
}

long count_triangles(const Graph& host, const EdgeSet& edges) {
  const int n = host.num_vertices();
  std::vector<std::vector<Vertex>> higher(n);
  for (EdgeId id : edges) higher[host.edge(id).u].push_back(host.edge(id).v);
  std::vector<char> mark(n, 0);
  long triangles = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : higher[u]) mark[v] = 1;
    for (Vertex v : higher[u]) {
      for (Vertex w : higher[v]) triangles += mark[w];
    }
    for (Vertex v : higher[u]) mark[v] = 0;
  }
  return triangles;
}

}  // namespace sforge
