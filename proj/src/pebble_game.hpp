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

// (k,l) pebble game for 0 <= l < 2k with edge removal.
//
// Every vertex owns k pebbles. An accepted edge is covered by a pebble of one
// endpoint and oriented away from it. An edge uv can join iff l+1 pebbles
// can be gathered on u and v by reversing paths. When that fails, the
// vertices reachable from {u, v} along out-edges form the smallest tight
// set containing u and v, i.e. they span the fundamental circuit.

#ifndef SFORGE_PEBBLE_GAME_HPP_
#define SFORGE_PEBBLE_GAME_HPP_

#include <vector>

#include "sforge/graph.hpp"

namespace sforge::detail {

class PebbleGame {
 public:
  PebbleGame(const Graph& host, int k, int l);

  // Gathers pebbles for `e`; true iff the current set plus e is independent.
  bool try_gather(EdgeId e);

  // Requires try_gather(e) to have just succeeded or to succeed now.
  void insert(EdgeId e);
  void erase(EdgeId e);

  // After a failed try_gather(e): edges of the smallest tight set containing
  // both endpoints of e.
  std::vector<EdgeId> blocking_edges(EdgeId e);

  int free_pebbles(Vertex v) const { return pebbles_[v]; }

 private:
  bool find_pebble(Vertex root, Vertex blocked);
  void next_stamp();

  const Graph* host_;
  int k_;
  int l_;
  std::vector<int> pebbles_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<Vertex> tail_;  // covering vertex of each present edge, or -1
  std::vector<unsigned> seen_;
  unsigned stamp_ = 0;
  std::vector<EdgeId> parent_edge_;
  std::vector<Vertex> stack_;
};

}  // namespace sforge::detail

#endif  // SFORGE_PEBBLE_GAME_HPP_
