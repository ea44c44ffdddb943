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

// Exact (a,b)-sparsity.
//
// A graph is (a,b)-sparse when every subgraph H on at least two vertices has
// e(H) <= a*v(H) + b. Only induced subgraphs matter, so everything here is
// phrased over vertex sets U with |U| >= 2. For the non-pathological range
// 2a + b >= 1 this is the same as quantifying over subgraphs with an edge.
//
// All decisions use exact rationals; the heavy lifting is a min-cut on the
// network that encodes q*e(U) - p*|U| for a = p/q.

#ifndef SFORGE_SPARSITY_HPP_
#define SFORGE_SPARSITY_HPP_

#include <cstdint>
#include <optional>

#include "sforge/graph.hpp"
#include "sforge/rational.hpp"

namespace sforge {

class SparsityParams {
 public:
  // Throws DomainError unless a > 0.
  SparsityParams(Rational a, Rational b);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  // Only graphs without edges can be sparse when 2a + b < 1.
  bool pathological() const { return 2 * a_ + b_ < 1; }

  // a = k + eps with integral k and 0 <= eps < 1.
  std::int64_t k() const { return floor_of(a_); }
  Rational eps() const { return a_ - k(); }

  friend bool operator==(const SparsityParams&, const SparsityParams&) = default;

 private:
  Rational a_;
  Rational b_;
};

/// Maximum of e(G[U]) - a|U| and an inclusion-minimal set attaining it.
struct Violation {
  Rational value;
  VertexSet witness;
};

enum class Verdict { kSparse, kNotSparse };

struct SparsityCertificate {
  Verdict verdict;
  SparsityParams params;
  // Maximizer of e(G[U]) - a|U| over |U| >= 2; empty when v(G) < 2.
  VertexSet witness;
  // e(G[U]) - a|U| - b at the witness. Absent when v(G) < 2.
  std::optional<Rational> max_violation;
  // a|U| - e(G[U]) at the witness. Absent when v(G) < 2.
  std::optional<Rational> min_potential;

  bool sparse() const { return verdict == Verdict::kSparse; }
};

/// a|U| - e(G[U]). Throws DomainError for empty U.
Rational potential(const Graph& g, const VertexSet& u, const Rational& a);

/// Max of e(G[U]) - a|U| over |U| >= 2, or nullopt when v(G) < 2.
///
/// Tie-breaking: when the maximum is positive the witness is the unique
/// inclusion-minimal maximizer. Otherwise it is the minimal maximizer that
/// contains the lowest-id edge among those lying in some maximizer; for
/// edgeless graphs it is {0, 1}.
std::optional<Violation> max_violation(const Graph& g, const Rational& a);

/// Max of e(G[U]) - a|U| over U containing both `x` and `y`, with the
/// inclusion-minimal maximizer.
Violation max_violation_through(const Graph& g, Vertex x, Vertex y,
                                const Rational& a);

/// Throws DomainError for pathological params.
SparsityCertificate is_sparse(const Graph& g, const SparsityParams& params);

/// Sparse, and e(G) = a v(G) + b.
bool is_tight(const Graph& g, const SparsityParams& params);

/// max e(J)/v(J) over subgraphs. Throws DomainError for edgeless graphs.
Rational m_of(const Graph& g);

/// max (e(J)-1)/(v(J)-2) over subgraphs with v(J) >= 3. Throws DomainError
/// when v(G) < 3.
Rational m2_of(const Graph& g);

/// max e(J)/(v(J) - 2 + 1/m2(h2)) over subgraphs J of h1 with an edge, by
/// enumeration (v(h1) <= 20). Throws DomainError unless m2(h2) > 0.
Rational m2_pair(const Graph& h1, const Graph& h2);

/// The slack f(k, eps) such that (k+eps, 0)-sparse implies
/// (k+1, -f)-sparse. Cases are tested in order, first match wins:
///   2k                     if eps(2k+2) < 2
///   ceil((2k+2)(1-eps))    if 2/(2k+2) <= eps < 1/2
///   k+1                    if 1/2 <= eps < (k+2)/(2k+3)
///   ceil((2k+3)(1-eps))    otherwise
/// Requires k >= 1 and 0 <= eps < 1.
std::int64_t forest_slack(std::int64_t k, const Rational& eps);

/// A seeded random graph built by scanning all vertex pairs in shuffled
/// order and keeping each pair whose edge leaves the graph sparse. Stops
/// once `max_edges` edges are kept. Throws DomainError for pathological
/// params.
Graph random_sparse_graph(int n, int max_edges, const SparsityParams& params,
                          std::uint64_t seed);

/// The spanning subgraph of `g` obtained by scanning its edges in a seeded
/// shuffled order and dropping each edge whose addition would break
/// sparsity. Edge order in the result follows `g`. Throws DomainError for
/// pathological params.
Graph greedy_sparse_subgraph(const Graph& g, const SparsityParams& params,
                             std::uint64_t seed);

}  // namespace sforge

#endif  // SFORGE_SPARSITY_HPP_
