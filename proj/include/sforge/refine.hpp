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


// Edge-swap refinements of a forest + remainder split.

#ifndef SFORGE_REFINE_HPP_
#define SFORGE_REFINE_HPP_

#include <vector>

#include "sforge/graph.hpp"

namespace sforge {

struct ForestPartition {
  Graph host;
  EdgeSet forest;
  EdgeSet rest;
};

struct RefineOptions {
  // Re-verify every invariant with the sparsity engine after each step.
  bool instrumented = false;
};

struct RefineStep {
  // Edge moved from the remainder into the forest.
  EdgeId to_forest;
  // Forest edge moved into the remainder by a swap, or -1 for a plain move.
  EdgeId to_rest;
  // Progress measure before and after the step: the triangle count of the
  // remainder, or the number of bad sets.
  long before;
  long after;
};

struct RefineTrace {
  std::vector<RefineStep> steps;
};

/// Makes the remainder triangle-free while keeping it a pseudoforest.
/// Requires a (2,-1)-sparse host, a forest and a (1,0)-sparse remainder;
/// throws DomainError otherwise and TheoremViolation if a triangle cannot
/// be removed.
ForestPartition eliminate_triangles(const ForestPartition& p,
                                    const RefineOptions& options = {},
                                    RefineTrace* trace = nullptr);

/// Repairs every (2k+1)-vertex set U whose remainder potential
/// k|U| - e(R[U]) equals s - 1, so that afterwards each such set spans at
/// most k(2k+1) - s remainder edges. Requires 1 <= s <= k - 1, a
/// (k+1,-s)-sparse host, a forest and a (k,1-s)-sparse remainder.
ForestPartition brooks_refine(const ForestPartition& p, int k, int s,
                              const RefineOptions& options = {},
                              RefineTrace* trace = nullptr);

/// All U with |U| = 2k+1 and k|U| - e(R[U]) = s - 1, sorted. Such a U
/// induces K_{2k+1} minus s - 1 edges in R, so the search only grows
/// near-cliques of high-degree vertices. Requires k >= 1 and s >= 1.
std::vector<VertexSet> find_bad_sets(const Graph& g, const EdgeSet& rest, int k, int s);

/// The same family by plain enumeration of all (2k+1)-subsets.
std::vector<VertexSet> find_bad_sets_exhaustive(const Graph& g, const EdgeSet& rest, int k,
                                                int s);

}  // namespace sforge

#endif  // SFORGE_REFINE_HPP_
