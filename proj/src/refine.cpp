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


#include "sforge/refine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <string>

#include "sforge/error.hpp"
#include "sforge/sparsity.hpp"
#include "sforge/union_find.hpp"

namespace sforge {

namespace {

using Mask = std::vector<bool>;

void check_partition(const ForestPartition& p) {
  const int e = p.host.num_edges();
  if (p.forest.host_edge_count() != e || p.rest.host_edge_count() != e) {
    throw DomainError("partition sides belong to a different host");
  }
  if (p.forest.size() + p.rest.size() != e) {
    throw DomainError("forest and remainder do not partition the edges");
  }
  for (EdgeId id : p.forest) {
    if (p.rest.contains(id)) throw DomainError("forest and remainder overlap");
  }
  if (!is_forest(p.host, p.forest)) throw DomainError("forest side has a cycle");
}

void require_sparse(const Graph& g, const SparsityParams& params, const std::string& what) {
  if (!is_sparse(g, params).sparse()) {
    throw DomainError(what + " is not (" + to_string(params.a()) + ", " +
                      to_string(params.b()) + ")-sparse");
  }
}

Graph restrict_to(const Graph& host, const Mask& mask) {
  return host.edge_subgraph(EdgeSet::from_mask(host, mask));
}

// Edges of the forest path from `from` to `to`, starting at `from`.
std::optional<std::vector<EdgeId>> forest_path(const Graph& host, const Mask& forest,
                                               Vertex from, Vertex to) {
  std::vector<EdgeId> via(host.num_vertices(), -1);
  std::vector<char> seen(host.num_vertices(), 0);
  std::queue<Vertex> queue;
  seen[to] = 1;
  queue.push(to);
  while (!queue.empty() && !seen[from]) {
    const Vertex w = queue.front();
    queue.pop();
    for (const Incidence& inc : host.neighbors(w)) {
      if (!forest[inc.edge] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      via[inc.neighbor] = inc.edge;
      queue.push(inc.neighbor);
    }
  }
  if (!seen[from]) return std::nullopt;
  std::vector<EdgeId> path;
  for (Vertex cur = from; cur != to;) {
    const EdgeId e = via[cur];
    path.push_back(e);
    const Edge& edge = host.edge(e);
    cur = edge.u == cur ? edge.v : edge.u;
  }
  return path;
}

bool is_pseudoforest(const Graph& host, const Mask& mask) {
  UnionFind uf(host.num_vertices());
  std::vector<int> spare(host.num_vertices(), 1);
  for (EdgeId e = 0; e < host.num_edges(); ++e) {
    if (!mask[e]) continue;
    const Vertex a = uf.find(host.edge(e).u);
    const Vertex b = uf.find(host.edge(e).v);
    if (a == b) {
      if (spare[a] == 0) return false;
      spare[a] = 0;
    } else {
      const int merged = spare[a] + spare[b] - 1;
      if (merged < 0) return false;
      uf.unite(a, b);
      spare[uf.find(a)] = merged;
    }
  }
  return true;
}

// Calls visit(x, y, z) with x < y < z for each triangle of the masked
// edges until it returns true.
bool for_each_triangle(const Graph& host, const Mask& mask,
                       const std::function<bool(Vertex, Vertex, Vertex)>& visit) {
  for (Vertex x = 0; x < host.num_vertices(); ++x) {
    for (const Incidence& xy : host.neighbors(x)) {
      if (xy.neighbor <= x || !mask[xy.edge]) continue;
      const Vertex y = xy.neighbor;
      auto xs = host.neighbors(x);
      auto ys = host.neighbors(y);
      auto i = xs.begin();
      auto j = ys.begin();
      while (i != xs.end() && j != ys.end()) {
        if (i->neighbor < j->neighbor) {
          ++i;
        } else if (j->neighbor < i->neighbor) {
          ++j;
        } else {
          if (i->neighbor > y && mask[i->edge] && mask[j->edge] &&
              visit(x, y, i->neighbor)) {
            return true;
          }
          ++i;
          ++j;
        }
      }
    }
  }
  return false;
}

long triangles(const Graph& host, const Mask& mask) {
  long count = 0;
  for_each_triangle(host, mask, [&](Vertex, Vertex, Vertex) {
    ++count;
    return false;
  });
  return count;
}

std::optional<std::array<Vertex, 3>> first_triangle(const Graph& host, const Mask& mask) {
  std::optional<std::array<Vertex, 3>> out;
  for_each_triangle(host, mask, [&](Vertex x, Vertex y, Vertex z) {
    out = std::array<Vertex, 3>{x, y, z};
    return true;
  });
  return out;
}

ForestPartition to_partition(const Graph& host, const Mask& forest) {
  Mask rest(forest.size());
  for (std::size_t e = 0; e < forest.size(); ++e) rest[e] = !forest[e];
  return {host, EdgeSet::from_mask(host, forest), EdgeSet::from_mask(host, rest)};
}

}  // namespace

ForestPartition eliminate_triangles(const ForestPartition& p, const RefineOptions& options,
                                    RefineTrace* trace) {
  check_partition(p);
  const Graph& host = p.host;
  require_sparse(host, SparsityParams(2, -1), "host");
  require_sparse(host.edge_subgraph(p.rest), SparsityParams(1, 0), "remainder");

  Mask forest = p.forest.mask();
  Mask rest = p.rest.mask();
  long count = triangles(host, rest);
  while (const auto tri = first_triangle(host, rest)) {
    bool repaired = false;
    RefineStep step{-1, -1, count, count};
    for (int i = 0; i < 3 && !repaired; ++i) {
      const Vertex a = (*tri)[(i + 1) % 3];
      const Vertex b = (*tri)[(i + 2) % 3];
      const EdgeId opposite = *host.find_edge(a, b);
      const auto path = forest_path(host, forest, std::min(a, b), std::max(a, b));
      if (!path) {
        rest[opposite] = false;
        forest[opposite] = true;
        step.to_forest = opposite;
        repaired = true;
        break;
      }
      rest[opposite] = false;
      for (EdgeId e : *path) {
        rest[e] = true;
        if (is_pseudoforest(host, rest) && triangles(host, rest) < count) {
          forest[e] = false;
          forest[opposite] = true;
          step.to_forest = opposite;
          step.to_rest = e;
          repaired = true;
          break;
        }
        rest[e] = false;
      }
      if (!repaired) rest[opposite] = true;
    }
    if (!repaired) {
      throw TheoremViolation("no swap removes the triangle {" + std::to_string((*tri)[0]) +
                             ", " + std::to_string((*tri)[1]) + ", " +
                             std::to_string((*tri)[2]) + "} from the remainder");
    }
    const long next = triangles(host, rest);
    step.after = next;
    if (options.instrumented) {
      if (next >= count) throw TheoremViolation("triangle count did not decrease");
      if (!is_forest(host, EdgeSet::from_mask(host, forest))) {
        throw TheoremViolation("forest side gained a cycle");
      }
      if (!is_sparse(restrict_to(host, rest), SparsityParams(1, 0)).sparse()) {
        throw TheoremViolation("remainder stopped being a pseudoforest");
      }
    }
    if (trace) trace->steps.push_back(step);
    count = next;
  }
  return to_partition(host, forest);
}

namespace {

constexpr int kPotentialCheckMaxVertices = 10;

// Every W whose remainder potential dropped must still have potential
// at least s.
void check_decreased_potentials(const Graph& host, const Mask& before, const Mask& after,
                                int k, int s) {
  const int n = host.num_vertices();
  if (n > kPotentialCheckMaxVertices) return;
  const Graph g_before = restrict_to(host, before);
  const Graph g_after = restrict_to(host, after);
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (std::popcount(w) < 2) continue;
    std::vector<Vertex> vs;
    for (Vertex v = 0; v < n; ++v) {
      if (w >> v & 1) vs.push_back(v);
    }
    const VertexSet set(host, vs);
    const int old_potential = k * set.size() - g_before.count_edges_within(set);
    const int new_potential = k * set.size() - g_after.count_edges_within(set);
    if (new_potential < old_potential && new_potential < s) {
      throw TheoremViolation("a swap dropped a potential below s");
    }
  }
}

}  // namespace

ForestPartition brooks_refine(const ForestPartition& p, int k, int s,
                              const RefineOptions& options, RefineTrace* trace) {
  if (s < 1 || s > k - 1) throw DomainError("brooks_refine needs 1 <= s <= k - 1");
  check_partition(p);
  const Graph& host = p.host;
  require_sparse(host, SparsityParams(k + 1, -s), "host");
  require_sparse(host.edge_subgraph(p.rest), SparsityParams(k, 1 - s), "remainder");

  Mask forest = p.forest.mask();
  Mask rest = p.rest.mask();
  auto bad = find_bad_sets(host, p.rest, k, s);
  while (!bad.empty()) {
    const VertexSet& u = bad.front();
    const auto inside = u.mask();
    // Pick y with no forest edge inside U, then its smallest remainder edge.
    EdgeId chosen = -1;
    Vertex y = -1;
    for (Vertex cand : u) {
      bool forest_inside = false;
      EdgeId first_rest = -1;
      for (const Incidence& inc : host.neighbors(cand)) {
        if (!inside[inc.neighbor]) continue;
        if (forest[inc.edge]) forest_inside = true;
        if (rest[inc.edge] && (first_rest < 0 || inc.edge < first_rest)) {
          first_rest = inc.edge;
        }
      }
      if (!forest_inside && first_rest >= 0) {
        y = cand;
        chosen = first_rest;
        break;
      }
    }
    if (chosen < 0) throw TheoremViolation("bad set without a vertex free of forest edges");
    const Edge& e = host.edge(chosen);
    const Vertex x = e.u == y ? e.v : e.u;
    const Mask before = rest;
    RefineStep step{chosen, -1, static_cast<long>(bad.size()), 0};
    const auto path = forest_path(host, forest, y, x);
    rest[chosen] = false;
    forest[chosen] = true;
    if (path) {
      const EdgeId f = path->front();
      forest[f] = false;
      rest[f] = true;
      step.to_rest = f;
    }
    const VertexSet repaired = u;
    bad = find_bad_sets(host, EdgeSet::from_mask(host, rest), k, s);
    step.after = static_cast<long>(bad.size());
    if (options.instrumented) {
      if (step.after >= step.before) throw TheoremViolation("bad-set family did not shrink");
      if (std::find(bad.begin(), bad.end(), repaired) != bad.end()) {
        throw TheoremViolation("a repaired set became bad again");
      }
      if (!is_forest(host, EdgeSet::from_mask(host, forest))) {
        throw TheoremViolation("forest side gained a cycle");
      }
      if (!is_sparse(restrict_to(host, rest), SparsityParams(k, 1 - s)).sparse()) {
        throw TheoremViolation("remainder lost its sparsity");
      }
      check_decreased_potentials(host, before, rest, k, s);
    }
    if (trace) trace->steps.push_back(step);
  }
  return to_partition(host, forest);
}

namespace {

class RestAdjacency {
 public:
  RestAdjacency(const Graph& g, const EdgeSet& rest) : lists_(g.num_vertices()) {
    if (rest.host_edge_count() != g.num_edges()) {
      throw DomainError("remainder belongs to a different host");
    }
    for (EdgeId e : rest) {
      lists_[g.edge(e).u].push_back(g.edge(e).v);
      lists_[g.edge(e).v].push_back(g.edge(e).u);
    }
    for (auto& list : lists_) std::sort(list.begin(), list.end());
  }

  bool adjacent(Vertex a, Vertex b) const {
    return std::binary_search(lists_[a].begin(), lists_[a].end(), b);
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return lists_[v]; }
  int degree(Vertex v) const { return static_cast<int>(lists_[v].size()); }

 private:
  std::vector<std::vector<Vertex>> lists_;
};

void check_bad_set_args(int k, int s) {
  if (k < 1 || s < 1) throw DomainError("bad sets need k >= 1 and s >= 1");
}

}  // namespace

std::vector<VertexSet> find_bad_sets(const Graph& g, const EdgeSet& rest, int k, int s) {
  check_bad_set_args(k, s);
  const RestAdjacency adj(g, rest);
  const int n = g.num_vertices();
  const int size = 2 * k + 1;
  const int max_missing = s - 1;
  if (size > n || max_missing > size * (size - 1) / 2) return {};
  const int min_degree = size - 1 - max_missing;
  // Two non-adjacent members share a neighbour inside U when s <= k + 1.
  const bool within_two = s <= k + 1;

  std::vector<VertexSet> out;
  std::vector<Vertex> current;
  std::vector<Vertex> candidates;
  std::vector<char> marked(n, 0);

  std::function<void(std::size_t, int)> grow = [&](std::size_t from, int missing) {
    if (static_cast<int>(current.size()) == size) {
      if (missing == max_missing) out.emplace_back(g, current);
      return;
    }
    const std::size_t need = size - current.size();
    for (std::size_t i = from; i + need <= candidates.size(); ++i) {
      const Vertex w = candidates[i];
      int extra = 0;
      for (Vertex c : current) extra += adj.adjacent(c, w) ? 0 : 1;
      if (missing + extra > max_missing) continue;
      current.push_back(w);
      grow(i + 1, missing + extra);
      current.pop_back();
    }
  };

  for (Vertex v = 0; v < n; ++v) {
    if (adj.degree(v) < min_degree) continue;
    candidates.clear();
    if (within_two) {
      for (Vertex w : adj.neighbors(v)) {
        if (!marked[w]) {
          marked[w] = 1;
          candidates.push_back(w);
        }
        for (Vertex x : adj.neighbors(w)) {
          if (!marked[x]) {
            marked[x] = 1;
            candidates.push_back(x);
          }
        }
      }
      for (Vertex w : candidates) marked[w] = 0;
    } else {
      for (Vertex w = v + 1; w < n; ++w) candidates.push_back(w);
    }
    std::erase_if(candidates,
                  [&](Vertex w) { return w <= v || adj.degree(w) < min_degree; });
    std::sort(candidates.begin(), candidates.end());
    current.assign(1, v);
    grow(0, 0);
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  });
  return out;
}

std::vector<VertexSet> find_bad_sets_exhaustive(const Graph& g, const EdgeSet& rest, int k,
                                                int s) {
  check_bad_set_args(k, s);
  const RestAdjacency adj(g, rest);
  const int n = g.num_vertices();
  const int size = 2 * k + 1;
  const int target = k * size + 1 - s;
  std::vector<VertexSet> out;
  if (size > n) return out;
  std::vector<Vertex> pick(size);
  for (int i = 0; i < size; ++i) pick[i] = i;
  while (true) {
    int edges = 0;
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) edges += adj.adjacent(pick[i], pick[j]) ? 1 : 0;
    }
    if (edges == target) out.emplace_back(g, pick);
    int i = size - 1;
    while (i >= 0 && pick[i] == n - size + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace sforge
