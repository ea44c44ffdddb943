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

#ifndef SFORGE_MATROID_HPP_
#define SFORGE_MATROID_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "sforge/graph.hpp"
#include "sforge/sparsity.hpp"

namespace sforge {

enum class MatroidRegime {
  kLorea,          // -2a <= b <= 0
  kWhiteWhiteley,  // b > 0
};

class IndependentSet;

// The count matroid on a host graph's edges whose independent sets are the
// (a,b)-sparse edge subsets, for integral a >= 1 and b >= -2a.
class CountMatroidOracle {
 public:
  // Throws DomainError outside the matroid regimes.
  CountMatroidOracle(Graph host, int a, int b);

  const Graph& host() const { return *host_; }
  const std::shared_ptr<const Graph>& shared_host() const { return host_; }
  int a() const { return a_; }
  int b() const { return b_; }
  MatroidRegime regime() const {
    return b_ > 0 ? MatroidRegime::kWhiteWhiteley : MatroidRegime::kLorea;
  }
  SparsityParams params() const { return SparsityParams(a_, b_); }

  // Decided by the exact sparsity engine on (V(s), s).
  bool is_independent(const EdgeSet& s) const;

  // Greedy over ascending edge ids.
  int rank(const EdgeSet& s) const;

  // A maximum independent subset of `s` picked greedily by ascending id.
  EdgeSet greedy_basis(const EdgeSet& s) const;

  // Vertex sets of the maximal tight subgraphs of (V(s), s), ordered by
  // smallest vertex. Requires s independent and -a <= b <= 0.
  std::vector<VertexSet> find_tight_components(const EdgeSet& s) const;

  // An empty independent set that can be grown and shrunk edge by edge.
  IndependentSet empty_set() const;

 private:
  std::shared_ptr<const Graph> host_;
  int a_;
  int b_;
};

CountMatroidOracle make_oracle(const Graph& host, int a, int b);

namespace detail {
class IndependenceBackend;
}

// An independent set of a count matroid with incremental queries. Integral
// regimes with b <= 0 run a pebble game; b > 0 falls back to min-cuts.
class IndependentSet {
 public:
  explicit IndependentSet(const CountMatroidOracle& oracle);
  IndependentSet(IndependentSet&&) noexcept;
  IndependentSet& operator=(IndependentSet&&) noexcept;
  ~IndependentSet();

  bool contains(EdgeId e) const { return member_[e]; }
  int size() const { return size_; }
  EdgeSet members() const;

  // True iff the current set plus `e` is still independent.
  bool can_add(EdgeId e);

  // nullopt if the current set plus `e` is independent; otherwise the edges
  // of the unique circuit in set + e, other than `e` itself.
  std::optional<std::vector<EdgeId>> circuit_with(EdgeId e);

  // Requires can_add(e).
  void add(EdgeId e);
  void remove(EdgeId e);

 private:
  void check_edge(EdgeId e) const;

  std::shared_ptr<const Graph> host_;
  std::unique_ptr<detail::IndependenceBackend> backend_;
  std::vector<bool> member_;
  int size_ = 0;
};

}  // namespace sforge

#endif  // SFORGE_MATROID_HPP_
