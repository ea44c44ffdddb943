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


#include "sforge/partition.hpp"

#include <array>
#include <queue>
#include <string>
#include <vector>

namespace sforge {

NotSparseError::NotSparseError(SparsityCertificate certificate)
    : DomainError("input graph is not (" + to_string(certificate.params.a()) + ", " +
                  to_string(certificate.params.b()) + ")-sparse"),
      certificate_(std::move(certificate)) {}

namespace {

constexpr int kUncoloured = -1;

class UnionAugmenter {
 public:
  UnionAugmenter(const Graph& g, const CountMatroidOracle& m1, const CountMatroidOracle& m2)
      : g_(g),
        sets_{m1.empty_set(), m2.empty_set()},
        side_(g.num_edges(), kUncoloured),
        parent_(g.num_edges(), -1),
        target_(g.num_edges(), -1),
        visited_(g.num_edges(), 0) {}

  // Inserts x along a shortest augmenting path. On failure returns the
  // edges reached by the search.
  std::optional<std::vector<EdgeId>> insert(EdgeId x) {
    std::vector<EdgeId> reached = {x};
    visited_[x] = 1;
    parent_[x] = -1;
    std::queue<EdgeId> queue;
    queue.push(x);
    std::optional<std::vector<EdgeId>> result;
    bool done = false;
    while (!queue.empty() && !done) {
      const EdgeId y = queue.front();
      queue.pop();
      for (int j = 0; j < 2 && !done; ++j) {
        if (side_[y] == j) continue;
        auto circuit = sets_[j].circuit_with(y);
        if (!circuit) {
          target_[y] = j;
          augment(y);
          done = true;
          break;
        }
        for (EdgeId z : *circuit) {
          if (visited_[z]) continue;
          visited_[z] = 1;
          parent_[z] = y;
          reached.push_back(z);
          queue.push(z);
        }
      }
    }
    for (EdgeId e : reached) visited_[e] = 0;
    if (!done) result = std::move(reached);
    return result;
  }

  EdgeSet side(int j) const {
    std::vector<bool> mask(g_.num_edges(), false);
    for (EdgeId e = 0; e < g_.num_edges(); ++e) mask[e] = side_[e] == j;
    return EdgeSet::from_mask(g_, mask);
  }

 private:
  // `end` joins target_[end]; every earlier path element takes the place
  // of its successor. All removals happen before any insertion, so each
  // insertion builds a subset of the final independent set.
  void augment(EdgeId end) {
    std::vector<EdgeId> path;
    for (EdgeId y = end; y != -1; y = parent_[y]) path.push_back(y);
    for (std::size_t i = 1; i < path.size(); ++i) target_[path[i]] = side_[path[i - 1]];
    for (EdgeId y : path) {
      if (side_[y] != kUncoloured) sets_[side_[y]].remove(y);
    }
    for (EdgeId y : path) {
      const int j = target_[y];
      if (!sets_[j].can_add(y)) {
        throw InvariantViolation("augmenting path exchange is not independent");
      }
      sets_[j].add(y);
      side_[y] = j;
    }
  }

  const Graph& g_;
  std::array<IndependentSet, 2> sets_;
  std::vector<int> side_;
  std::vector<EdgeId> parent_;
  std::vector<int> target_;
  std::vector<char> visited_;
};

bool deficient(const CountMatroidOracle& m1, const CountMatroidOracle& m2, const EdgeSet& b) {
  return m1.rank(b) + m2.rank(b) < b.size();
}

EdgeSet minimize(const Graph& g, const CountMatroidOracle& m1, const CountMatroidOracle& m2,
                 EdgeSet b) {
  for (EdgeId e : std::vector<EdgeId>(b.begin(), b.end())) {
    auto mask = b.mask();
    mask[e] = false;
    EdgeSet smaller = EdgeSet::from_mask(g, mask);
    if (deficient(m1, m2, smaller)) b = std::move(smaller);
  }
  return b;
}

void check_host(const Graph& g, const CountMatroidOracle& m) {
  if (!(m.host() == g)) throw DomainError("matroid oracle is over a different host graph");
}

// Certificate for a graph with an edge under params where only edgeless
// graphs are sparse.
SparsityCertificate pathological_certificate(const Graph& g, const SparsityParams& params) {
  const Edge& e = g.edge(0);
  const Rational value = 1 - 2 * params.a();
  return SparsityCertificate{Verdict::kNotSparse, params, VertexSet(g, {e.u, e.v}),
                             value - params.b(), -value};
}

void require_sparse(const Graph& g, const SparsityParams& params) {
  if (params.pathological()) {
    if (g.num_edges() > 0) throw NotSparseError(pathological_certificate(g, params));
    return;
  }
  auto cert = is_sparse(g, params);
  if (!cert.sparse()) throw NotSparseError(std::move(cert));
}

}  // namespace

PartitionResult matroid_union_partition(const Graph& g, const CountMatroidOracle& m1,
                                        const CountMatroidOracle& m2,
                                        const PartitionOptions& options) {
  check_host(g, m1);
  check_host(g, m2);
  UnionAugmenter augmenter(g, m1, m2);
  for (EdgeId x = 0; x < g.num_edges(); ++x) {
    auto blocked = augmenter.insert(x);
    if (!blocked) continue;
    EdgeSet b(g, std::move(*blocked));
    if (options.minimize_certificate) b = minimize(g, m1, m2, std::move(b));
    PartitionResult result{PartitionOutcome::kDeficiency, EdgeSet::none(g), EdgeSet::none(g),
                           std::move(b), 0, 0};
    result.r1 = m1.rank(result.deficient);
    result.r2 = m2.rank(result.deficient);
    if (result.r1 + result.r2 >= result.deficient.size()) {
      throw InvariantViolation("deficiency certificate failed its rank re-check");
    }
    return result;
  }
  PartitionResult result{PartitionOutcome::kSuccess, augmenter.side(0), augmenter.side(1),
                         EdgeSet::none(g), 0, 0};
  if (!m1.is_independent(result.first) || !m2.is_independent(result.second)) {
    throw InvariantViolation("partition side failed its sparsity re-check");
  }
  return result;
}

bool partition_guaranteed(int a1, int b1, int a2, int b2) {
  const bool negative = -a1 <= b1 && b1 <= 0 && -a2 <= b2 && b2 <= 0;
  const bool positive = b1 >= 0 && b2 >= 0;
  return negative || positive;
}

PartitionResult partition_sparse(const Graph& g, int a1, int b1, int a2, int b2,
                                 const PartitionOptions& options) {
  const CountMatroidOracle m1(g, a1, b1);
  const CountMatroidOracle m2(g, a2, b2);
  require_sparse(g, SparsityParams(a1 + a2, b1 + b2));
  PartitionResult result = matroid_union_partition(g, m1, m2, options);
  if (!result.success() && partition_guaranteed(a1, b1, a2, b2)) {
    throw TheoremViolation("no (" + std::to_string(a1) + "," + std::to_string(b1) + ") + (" +
                           std::to_string(a2) + "," + std::to_string(b2) +
                           ") split of a sparse graph although one is guaranteed");
  }
  return result;
}

PartitionResult partition_forest_plus(const Graph& g, int k, const Rational& eps) {
  if (k < 1) throw DomainError("partition_forest_plus needs k >= 1");
  if (eps < 0 || eps >= 1) throw DomainError("partition_forest_plus needs 0 <= eps < 1");
  require_sparse(g, SparsityParams(k + eps, 0));
  const auto f = forest_slack(k, eps);
  const CountMatroidOracle forest(g, 1, -1);
  const CountMatroidOracle rest(g, k, static_cast<int>(1 - f));
  PartitionResult result = matroid_union_partition(g, forest, rest);
  if (!result.success()) {
    throw TheoremViolation("no forest + (" + std::to_string(k) + ", " +
                           std::to_string(1 - f) + ") split of a (" + to_string(k + eps) +
                           ", 0)-sparse graph");
  }
  return result;
}

}  // namespace sforge
