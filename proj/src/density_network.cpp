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

#include "density_network.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "sforge/error.hpp"

namespace sforge::detail {
namespace {

constexpr std::int64_t kInfinity = std::numeric_limits<std::int64_t>::max() / 4;

}  // namespace

DensityNetwork::DensityNetwork(const Graph& g, std::int64_t p, std::int64_t q)
    : n_(g.num_vertices()), source_(n_), sink_(n_ + 1) {
  if (p <= 0 || q <= 0) throw DomainError("density network needs p, q > 0");
  int max_degree = 0;
  for (Vertex v = 0; v < n_; ++v) max_degree = std::max(max_degree, g.degree(v));
  const std::int64_t big = q * max_degree;
  if (big / q != max_degree || big > kInfinity / (n_ + 1) / 4 ||
      p > kInfinity / (n_ + 1) / 4) {
    throw DomainError("density network capacities overflow");
  }
  base_total_ = static_cast<std::int64_t>(n_) * big;

  adjacency_.resize(n_ + 2);
  source_arc_.resize(n_);
  for (Vertex v = 0; v < n_; ++v) {
    source_arc_[v] = static_cast<int>(arcs_.size());
    add_arc_pair(source_, v, big, 0);
    add_arc_pair(v, sink_, big + 2 * p - q * g.degree(v), 0);
  }
  for (const Edge& e : g.edges()) add_arc_pair(e.u, e.v, q, q);
  initial_caps_.reserve(arcs_.size());
  for (const Arc& arc : arcs_) initial_caps_.push_back(arc.cap);
  level_.resize(n_ + 2);
  cursor_.resize(n_ + 2);
}

void DensityNetwork::add_arc_pair(int from, int to, std::int64_t cap,
                                  std::int64_t back_cap) {
  adjacency_[from].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({to, cap});
  adjacency_[to].push_back(static_cast<int>(arcs_.size()));
  arcs_.push_back({from, back_cap});
}

bool DensityNetwork::build_levels() {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source_] = 0;
  queue.push(source_);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop();
    for (int a : adjacency_[node]) {
      if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
        level_[arcs_[a].to] = level_[node] + 1;
        queue.push(arcs_[a].to);
      }
    }
  }
  return level_[sink_] >= 0;
}

std::int64_t DensityNetwork::push(int node, std::int64_t limit) {
  if (node == sink_) return limit;
  for (std::size_t& i = cursor_[node]; i < adjacency_[node].size(); ++i) {
    const int a = adjacency_[node][i];
    Arc& arc = arcs_[a];
    if (arc.cap <= 0 || level_[arc.to] != level_[node] + 1) continue;
    const std::int64_t pushed = push(arc.to, std::min(limit, arc.cap));
    if (pushed > 0) {
      arc.cap -= pushed;
      arcs_[a ^ 1].cap += pushed;
      return pushed;
    }
  }
  return 0;
}

DensityNetwork::Cut DensityNetwork::solve(std::span<const Vertex> forced) {
  for (std::size_t a = 0; a < arcs_.size(); ++a) arcs_[a].cap = initial_caps_[a];
  for (Vertex v : forced) arcs_[source_arc_[v]].cap = kInfinity;

  std::int64_t flow = 0;
  while (build_levels()) {
    std::fill(cursor_.begin(), cursor_.end(), 0);
    while (const std::int64_t pushed = push(source_, kInfinity)) flow += pushed;
  }

  // After the last failed level build, level_ >= 0 marks the residual
  // reachable set of the source: the minimal source side.
  Cut cut;
  for (Vertex v = 0; v < n_; ++v) {
    if (level_[v] >= 0) cut.minimal_set.push_back(v);
  }
  // With forced vertices the forced source arcs are never cut, so the
  // flow still equals n*C + 2p|U| - 2q*e(U) at the optimum.
  cut.value = (base_total_ - flow) / 2;
  return cut;
}

std::vector<Vertex> DensityNetwork::maximal_set() const {
  // Vertices that cannot reach the sink in the residual network.
  std::vector<char> reaches(n_ + 2, 0);
  std::vector<std::vector<int>> reverse(n_ + 2);
  for (int from = 0; from < n_ + 2; ++from) {
    for (int a : adjacency_[from]) {
      if (arcs_[a].cap > 0) reverse[arcs_[a].to].push_back(from);
    }
  }
  std::queue<int> queue;
  reaches[sink_] = 1;
  queue.push(sink_);
  while (!queue.empty()) {
    const int node = queue.front();
    queue.pop();
    for (int prev : reverse[node]) {
      if (!reaches[prev]) {
        reaches[prev] = 1;
        queue.push(prev);
      }
    }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n_; ++v) {
    if (!reaches[v]) out.push_back(v);
  }
  return out;
}

}  // namespace sforge::detail
