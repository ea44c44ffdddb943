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


// Splitting an (m,0)-sparse graph into a forest and an (m,1-2m)-sparse
// graph.

#ifndef SFORGE_DECOMPOSE_HPP_
#define SFORGE_DECOMPOSE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sforge/graph.hpp"
#include "sforge/rational.hpp"
#include "sforge/refine.hpp"
#include "sforge/sparsity.hpp"

namespace sforge {

enum class DecompositionCase {
  kSmallTwoForests,     // 1 < m < 9/5
  kSmallTriangleFree,   // 9/5 <= m < 2
  kLargeA,              // eps < 3/(2k+2)
  kLargeB,              // eps < 1/2
  kLargeC,              // eps < (k+3)/(2k+3)
  kLargeD1,             // eps <= 3/4
  kLargeD2,             // eps >= (k+4)/(2k+3)
  kLargeD3,             // otherwise
};

/// "small_m_two_forests", "small_m_triangle_free", "large_m_case_A", ...,
/// "large_m_case_D3".
std::string_view case_label(DecompositionCase c);

/// The case an m > 1 falls in, with k = floor(m) and eps = m - k; regions
/// are tested in the order listed in DecompositionCase.
DecompositionCase classify(const Rational& m);

struct Decomposition {
  Graph host;
  EdgeSet forest;
  EdgeSet rest;
  Rational m;
  DecompositionCase label;
};

// Wall-clock seconds spent in each stage of one decompose_ksw call.
struct DecomposeTimings {
  double certify = 0;
  double split = 0;
  double refine = 0;
  double verify = 0;
};

struct DecomposeOptions {
  // Re-verify the refinement steps as they run.
  bool instrumented = false;
  // Receives the refinement steps when set.
  RefineTrace* trace = nullptr;
  DecomposeTimings* timings = nullptr;
};

/// Requires m > 1 and g (m,0)-sparse: throws DomainError for m <= 1 and
/// NotSparseError for a non-sparse input. The result is verified before it
/// is returned; a failed check raises TheoremViolation.
Decomposition decompose_ksw(const Graph& g, const Rational& m,
                            const DecomposeOptions& options = {});

struct VerificationReport {
  bool exact_partition = false;
  bool forest_acyclic = false;
  bool rest_sparse = false;
  // The remainder's (m, 1-2m) certificate when the partition is exact.
  std::optional<SparsityCertificate> rest_certificate;
  std::string message;

  bool ok() const { return exact_partition && forest_acyclic && rest_sparse; }
};

/// Independent re-check: the sides partition E(host), the forest has no
/// cycle (by union-find), and the remainder is (m, 1-2m)-sparse. Never
/// throws for a well-formed Decomposition; m <= 1 is reported as failure.
VerificationReport verify_decomposition(const Decomposition& d);

/// For sets F_1..F_r over their union of size n, each meeting the union of
/// the others in at least s elements: whether sum |F_i| >= n + r*s/2.
/// Throws DomainError naming every F_i that misses the overlap condition.
bool check_hypergraph_bound(const std::vector<VertexSet>& sets, int s);

}  // namespace sforge

#endif  // SFORGE_DECOMPOSE_HPP_
