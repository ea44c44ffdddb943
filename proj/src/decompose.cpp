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


#include "sforge/decompose.hpp"

#include <algorithm>
#include <chrono>

#include "sforge/error.hpp"
#include "sforge/partition.hpp"
#include "sforge/refine.hpp"
#include "sforge/union_find.hpp"

namespace sforge {

std::string_view case_label(DecompositionCase c) {
  switch (c) {
    case DecompositionCase::kSmallTwoForests:
      return "small_m_two_forests";
    case DecompositionCase::kSmallTriangleFree:
      return "small_m_triangle_free";
    case DecompositionCase::kLargeA:
      return "large_m_case_A";
    case DecompositionCase::kLargeB:
      return "large_m_case_B";
    case DecompositionCase::kLargeC:
      return "large_m_case_C";
    case DecompositionCase::kLargeD1:
      return "large_m_case_D1";
    case DecompositionCase::kLargeD2:
      return "large_m_case_D2";
    case DecompositionCase::kLargeD3:
      return "large_m_case_D3";
  }
  return "unknown";
}

DecompositionCase classify(const Rational& m) {
  if (m <= 1) throw DomainError("decomposition needs m > 1, got " + to_string(m));
  if (m < Rational(9, 5)) return DecompositionCase::kSmallTwoForests;
  if (m < 2) return DecompositionCase::kSmallTriangleFree;
  const std::int64_t k = floor_of(m);
  const Rational eps = m - k;
  if (eps < Rational(3, 2 * k + 2)) return DecompositionCase::kLargeA;
  if (eps < Rational(1, 2)) return DecompositionCase::kLargeB;
  if (eps < Rational(k + 3, 2 * k + 3)) return DecompositionCase::kLargeC;
  if (eps <= Rational(3, 4)) return DecompositionCase::kLargeD1;
  if (eps >= Rational(k + 4, 2 * k + 3)) return DecompositionCase::kLargeD2;
  return DecompositionCase::kLargeD3;
}

namespace {

// A split that a theorem guarantees; any precondition failure here means
// the guarantee was wrong.
PartitionResult guaranteed_split(const Graph& g, int a1, int b1, int a2, int b2) {
  try {
    return partition_sparse(g, a1, b1, a2, b2);
  } catch (const NotSparseError& e) {
    throw TheoremViolation(std::string("intermediate sparsity failed: ") + e.what());
  }
}

class StageClock {
 public:
  explicit StageClock(DecomposeTimings* timings) : timings_(timings) {}

  // Adds the time since the previous lap to `slot`.
  void lap(double DecomposeTimings::*slot) {
    const auto now = std::chrono::steady_clock::now();
    if (timings_) timings_->*slot += std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }

 private:
  DecomposeTimings* timings_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Decomposition decompose_ksw(const Graph& g, const Rational& m,
                            const DecomposeOptions& options) {
  const DecompositionCase label = classify(m);
  StageClock clock(options.timings);
  {
    auto cert = is_sparse(g, SparsityParams(m, 0));
    if (!cert.sparse()) throw NotSparseError(std::move(cert));
  }
  clock.lap(&DecomposeTimings::certify);
  const RefineOptions refine{.instrumented = options.instrumented};
  const std::int64_t k = floor_of(m);
  const Rational eps = m - k;

  ForestPartition parts{g, EdgeSet::none(g), EdgeSet::none(g)};
  switch (label) {
    case DecompositionCase::kSmallTwoForests: {
      const auto r = guaranteed_split(g, 1, -1, 1, -1);
      parts = {g, r.first, r.second};
      clock.lap(&DecomposeTimings::split);
      break;
    }
    case DecompositionCase::kSmallTriangleFree: {
      const auto r = guaranteed_split(g, 1, -1, 1, 0);
      clock.lap(&DecomposeTimings::split);
      parts = eliminate_triangles({g, r.first, r.second}, refine, options.trace);
      clock.lap(&DecomposeTimings::refine);
      break;
    }
    default: {
      const auto r = partition_forest_plus(g, static_cast<int>(k), eps);
      parts = {g, r.first, r.second};
      clock.lap(&DecomposeTimings::split);
      if (label == DecompositionCase::kLargeD2) {
        const int s = static_cast<int>(forest_slack(k, eps));
        parts = brooks_refine(parts, static_cast<int>(k), s, refine, options.trace);
        clock.lap(&DecomposeTimings::refine);
      }
      break;
    }
  }

  Decomposition d{g, std::move(parts.forest), std::move(parts.rest), m, label};
  const VerificationReport report = verify_decomposition(d);
  clock.lap(&DecomposeTimings::verify);
  if (!report.ok()) {
    throw TheoremViolation("decomposition for m = " + to_string(m) + " (" +
                           std::string(case_label(label)) + ") failed: " + report.message);
  }
  return d;
}

VerificationReport verify_decomposition(const Decomposition& d) {
  VerificationReport report;
  const Graph& host = d.host;
  const int e = host.num_edges();
  if (d.forest.host_edge_count() != e || d.rest.host_edge_count() != e) {
    report.message = "sides belong to a different host";
    return report;
  }
  std::vector<int> hits(e, 0);
  for (EdgeId id : d.forest) ++hits[id];
  for (EdgeId id : d.rest) ++hits[id];
  report.exact_partition = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  if (!report.exact_partition) report.message = "sides do not partition the edges";

  UnionFind uf(host.num_vertices());
  report.forest_acyclic = true;
  for (EdgeId id : d.forest) {
    if (!uf.unite(host.edge(id).u, host.edge(id).v)) {
      report.forest_acyclic = false;
      report.message = "forest side has a cycle through edge " + std::to_string(id);
      break;
    }
  }

  if (d.m <= 1) {
    report.message = "m must exceed 1";
    return report;
  }
  const SparsityParams target(d.m, 1 - 2 * d.m);
  if (target.pathological() && !d.rest.empty()) {
    report.message = "remainder has edges but the target sparsity is pathological";
    return report;
  }
  if (!target.pathological()) {
    report.rest_certificate = is_sparse(host.edge_subgraph(d.rest), target);
    report.rest_sparse = report.rest_certificate->sparse();
    if (!report.rest_sparse) {
      report.message = "remainder is not (" + to_string(target.a()) + ", " +
                       to_string(target.b()) + ")-sparse";
    }
  } else {
    report.rest_sparse = true;
  }
  return report;
}

bool check_hypergraph_bound(const std::vector<VertexSet>& sets, int s) {
  if (sets.empty()) return true;
  const int universe = sets.front().host_vertex_count();
  std::vector<int> cover(universe, 0);
  long total = 0;
  for (const VertexSet& f : sets) {
    if (f.host_vertex_count() != universe) {
      throw DomainError("hypergraph sets live in different universes");
    }
    for (Vertex v : f) ++cover[v];
    total += f.size();
  }
  std::string offenders;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    int overlap = 0;
    for (Vertex v : sets[i]) overlap += cover[v] >= 2 ? 1 : 0;
    if (overlap < s) {
      offenders += (offenders.empty() ? "" : ", ") + std::to_string(i) + " (overlap " +
                   std::to_string(overlap) + ")";
    }
  }
  if (!offenders.empty()) {
    throw DomainError("sets meet the others in fewer than " + std::to_string(s) +
                      " elements: " + offenders);
  }
  const long n = std::count_if(cover.begin(), cover.end(), [](int c) { return c > 0; });
  const long r = static_cast<long>(sets.size());
  return 2 * total >= 2 * n + r * s;
}

}  // namespace sforge
