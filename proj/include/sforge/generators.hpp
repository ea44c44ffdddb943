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

#ifndef SFORGE_GENERATORS_HPP_
#define SFORGE_GENERATORS_HPP_

#include <cstdint>
#include <vector>

#include "sforge/graph.hpp"

namespace sforge {

Graph complete_graph(int t);

// Vertex i is joined to i +- 1, ..., i +- radius (mod n). Requires
// n >= 2 * radius + 1 so that the result is simple and 2*radius-regular.
Graph circulant(int n, int radius);

// Disjoint union of g1 and g2 with v2 identified to v1. Vertices of g1 keep
// their indices; the other vertices of g2 follow in their original order.
Graph glue(const Graph& g1, Vertex v1, const Graph& g2, Vertex v2);

// Disjoint union of `copies` copies of `g`.
Graph disjoint_copies(const Graph& g, int copies);

// The zigzag Hamiltonian paths i, i+1, i-1, i+2, i-2, ... of K_{2h} on
// vertices 0..2h-1. The h paths partition the edges of K_{2h}.
std::vector<std::vector<Vertex>> zigzag_hamiltonian_paths(int h);

// t disjoint copies of the 2(a1+a2)-regular circulant on n vertices; every
// copy is (a1+a2, 0)-tight, yet the union has no partition into an
// (a1,-1)-sparse and an (a2,1)-sparse graph.
Graph gen_counterexample_disconnected(int a1, int a2, int n, int t);

// Two copies of H glued at one vertex, where H is the union of 2a
// edge-disjoint Hamiltonian paths of K_{4a}. The result is (2a,-2a)-tight
// and has no partition into (a,-t)- and (a,t-2a)-sparse parts, 1 <= t < a.
Graph gen_counterexample_glued_trees(int a);

// t copies of K_{2a+2} minus an edge xy arranged in a ring, y_i glued to
// x_{i+1}. The ring is (a+1,-a-2)-sparse but has no partition into a forest
// and an (a,-a-1)-sparse graph. Requires t >= a + 2.
Graph gen_counterexample_ring(int a, int t);

// Erdos-Renyi G(n, p) from a seeded std::mt19937_64.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace sforge

#endif  // SFORGE_GENERATORS_HPP_
