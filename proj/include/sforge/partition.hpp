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


// Two-matroid partitioning of a graph's edges by matroid-union augmentation.

#ifndef SFORGE_PARTITION_HPP_
#define SFORGE_PARTITION_HPP_

#include "sforge/error.hpp"
#include "sforge/graph.hpp"
#include "sforge/matroid.hpp"
#include "sforge/rational.hpp"
#include "sforge/sparsity.hpp"

namespace sforge {

enum class PartitionOutcome { kSuccess, kDeficiency };

struct PartitionResult {
  PartitionOutcome outcome;
  // On success: the two colour classes, independent in M1 and M2.
  EdgeSet first;
  EdgeSet second;
  // On deficiency: an edge set with r1 + r2 < |B|.
  EdgeSet deficient;
  int r1 = 0;
  int r2 = 0;

  bool success() const { return outcome == PartitionOutcome::kSuccess; }
};

struct PartitionOptions {
  // Shrink the deficiency certificate while it stays deficient.
  bool minimize_certificate = false;
};

/// Raised when a partition's sparsity precondition fails.
class NotSparseError : public DomainError {
 public:
  explicit NotSparseError(SparsityCertificate certificate);
  const SparsityCertificate& certificate() const { return certificate_; }

 private:
  SparsityCertificate certificate_;
};

/// Partitions E(g) into an M1- and an M2-independent set, or returns a
/// deficient set. Edges are inserted in ascending id along shortest
/// augmenting paths. Both sides of a success are re-checked with the
/// sparsity engine and a deficiency is re-checked by greedy rank; a failed
/// re-check raises InvariantViolation. Throws DomainError when an oracle's
/// host differs from g.
PartitionResult matroid_union_partition(const Graph& g, const CountMatroidOracle& m1,
                                        const CountMatroidOracle& m2,
                                        const PartitionOptions& options = {});

/// True when (a1,b1), (a2,b2) satisfy -a1 <= b1 <= 0 and -a2 <= b2 <= 0,
/// or b1 >= 0 and b2 >= 0. Every (a1+a2, b1+b2)-sparse graph then splits.
bool partition_guaranteed(int a1, int b1, int a2, int b2);

/// Splits g into (a1,b1)- and (a2,b2)-sparse parts. Throws NotSparseError
/// unless g is (a1+a2, b1+b2)-sparse, DomainError outside the matroid
/// regimes and TheoremViolation when a guaranteed split fails.
PartitionResult partition_sparse(const Graph& g, int a1, int b1, int a2, int b2,
                                 const PartitionOptions& options = {});

/// Splits a (k+eps, 0)-sparse graph into a forest (first) and a
/// (k, 1 - f(k,eps))-sparse graph (second). Throws NotSparseError when the
/// input is not sparse and TheoremViolation if no split is found.
PartitionResult partition_forest_plus(const Graph& g, int k, const Rational& eps);

}  // namespace sforge

#endif  // SFORGE_PARTITION_HPP_
