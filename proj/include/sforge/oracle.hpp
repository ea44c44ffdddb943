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


// Brute-force reference engines. They depend only on the graph types and
// exact rationals and serve as ground truth for the fast algorithms.

#ifndef SFORGE_ORACLE_HPP_
#define SFORGE_ORACLE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "sforge/graph.hpp"
#include "sforge/rational.hpp"
#include "sforge/sparsity.hpp"

namespace sforge {

class CountMatroidOracle;

inline constexpr int kBruteSparseMaxVertices = 22;
inline constexpr int kBrutePartitionMaxEdges = 20;
inline constexpr int kAxiomCheckMaxEdges = 12;
inline constexpr int kEnumerateMaxVertices = 8;

/// Exact certificate by enumerating every U with |U| >= 2 in Gray-code
/// order. The witness is a maximizer of e(G[U]) - a|U| with the fewest
/// vertices, ties broken by the smallest vertex bitmask. Accepts any b,
/// including pathological ones. Throws DomainError when v(g) > 22.
SparsityCertificate brute_sparse(const Graph& g, const Rational& a,
                                 const Rational& b);

struct PartitionWitness {
  EdgeSet first;
  EdgeSet second;
};

/// Searches all 2-colourings of E(g) for one whose colour classes are
/// (a1,b1)- and (a2,b2)-sparse. Prunes as soon as a class violates.
/// Throws DomainError when e(g) > 20 or a class would need more than 24
/// vertices of search.
std::optional<PartitionWitness> brute_partition_exists(
    const Graph& g, const Rational& a1, const Rational& b1, const Rational& a2,
    const Rational& b2);

/// Independence predicate over subsets of a ground set {0..size-1} encoded
/// as bitmasks.
using IndependencePredicate = std::function<bool(std::uint32_t)>;

/// True iff the predicate describes a matroid: the empty set is
/// independent, independence is hereditary, and the exchange axiom holds.
/// Throws DomainError when ground_size > 12.
bool check_matroid_axioms(int ground_size, const IndependencePredicate& independent);

/// The axioms for the count matroid over its host's edges.
bool check_matroid_axioms(const CountMatroidOracle& oracle);

/// One representative of every isomorphism class of graphs on n vertices,
/// n <= 8, sorted by canonical code.
std::vector<Graph> enumerate_graphs(int n);

/// Canonical code of a graph with n <= 8: the lexicographically smallest
/// upper-triangle adjacency bit string over all relabellings. Two graphs
/// are isomorphic iff their codes agree.
std::uint32_t canonical_code(const Graph& g);

}  // namespace sforge

#endif  // SFORGE_ORACLE_HPP_
