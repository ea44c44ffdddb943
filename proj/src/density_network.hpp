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

// Min-cut network whose cuts encode q*e(U) - p*|U| for a vertex set U.
//
// Nodes are the graph's vertices plus a source and a sink. With
// C = q * maxdeg the arcs are
//   source -> v : C
//   v -> sink   : C + 2p - q*deg(v)
//   u <-> v     : q in both directions, one pair per edge
// and a cut with source side {source} + U costs n*C + 2p|U| - 2q*e(U).
// Forcing a vertex into U raises its source arc to infinity.

#ifndef SFORGE_DENSITY_NETWORK_HPP_
#define SFORGE_DENSITY_NETWORK_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sforge/graph.hpp"

namespace sforge::detail {

class DensityNetwork {
 public:
  struct Cut {
    // max over U (containing the forced vertices) of q*e(U) - p*|U|.
    std::int64_t value;
    // The inclusion-minimal maximizer.
    std::vector<Vertex> minimal_set;
  };

  // Requires p > 0, q > 0.
  DensityNetwork(const Graph& g, std::int64_t p, std::int64_t q);

  // Solves with every vertex of `forced` pinned into U. Can be called
  // repeatedly; each call starts from the unsaturated network.
  Cut solve(std::span<const Vertex> forced);

  // Maximal maximizer of the most recent solve.
  std::vector<Vertex> maximal_set() const;

 private:
  struct Arc {
    int to;
    std::int64_t cap;
  };

  void add_arc_pair(int from, int to, std::int64_t cap, std::int64_t back_cap);
  bool build_levels();
  std::int64_t push(int node, std::int64_t limit);

  int n_;
  int source_;
  int sink_;
  std::int64_t base_total_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Arc> arcs_;
  std::vector<std::int64_t> initial_caps_;
  std::vector<int> source_arc_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace sforge::detail

#endif  // SFORGE_DENSITY_NETWORK_HPP_
