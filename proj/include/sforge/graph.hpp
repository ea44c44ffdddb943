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

#ifndef SFORGE_GRAPH_HPP_
#define SFORGE_GRAPH_HPP_

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace sforge {

using Vertex = int;
using EdgeId = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

class EdgeSet;
class VertexSet;

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v
// and sorted lexicographically; an edge's id is its position in that order.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);
  // Throws DomainError on self-loops, parallel edges or out-of-range
  // endpoints. Endpoint order inside a pair does not matter.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId id) const { return edges_[id]; }
  std::span<const Edge> edges() const { return edges_; }

  // Incident edges of `v`, sorted by neighbor.
  std::span<const Incidence> neighbors(Vertex v) const {
    return {incidences_.data() + offsets_[v],
            incidences_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;

  // Same vertex set, only the edges in `subset`. Edge i of the result is the
  // i-th smallest id of `subset`.
  Graph edge_subgraph(const EdgeSet& subset) const;

  // Number of edges with both endpoints in `vertices`.
  int count_edges_within(const VertexSet& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency();

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<Incidence> incidences_;
};

// A set of edge ids of some host graph, kept sorted.
class EdgeSet {
 public:
  EdgeSet() = default;
  // Throws DomainError for ids outside the host. Duplicates collapse.
  EdgeSet(const Graph& host, std::vector<EdgeId> ids);

  static EdgeSet all(const Graph& host);
  static EdgeSet none(const Graph& host);
  // Ids where `mask[id]` is true.
  static EdgeSet from_mask(const Graph& host, const std::vector<bool>& mask);

  std::span<const EdgeId> ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId id) const;
  int host_edge_count() const { return host_edge_count_; }
  std::vector<bool> mask() const;

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  int host_edge_count_ = 0;
  std::vector<EdgeId> ids_;
};

// A set of vertices of some host graph, kept sorted.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(int host_vertex_count, std::vector<Vertex> vertices);
  VertexSet(const Graph& host, std::vector<Vertex> vertices)
      : VertexSet(host.num_vertices(), std::move(vertices)) {}

  static VertexSet all(const Graph& host);

  std::span<const Vertex> vertices() const { return vertices_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool empty() const { return vertices_.empty(); }
  bool contains(Vertex v) const;
  int host_vertex_count() const { return host_vertex_count_; }
  std::vector<bool> mask() const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int host_vertex_count_ = 0;
  std::vector<Vertex> vertices_;
};

// Endpoints of the edges in `edges`.
VertexSet spanned_vertices(const Graph& host, const EdgeSet& edges);

// Edges of `host` with both endpoints in `vertices`.
EdgeSet induced_edges(const Graph& host, const VertexSet& vertices);

// True iff (V, edges) has no cycle.
bool is_forest(const Graph& host, const EdgeSet& edges);

// Number of triangles of (V, edges).
long count_triangles(const Graph& host, const EdgeSet& edges);

}  // namespace sforge

#endif  // SFORGE_GRAPH_HPP_
