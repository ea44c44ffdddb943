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


#include "sforge/matroid.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "density_network.hpp"
#include "pebble_game.hpp"
#include "sforge/error.hpp"

namespace sforge {

namespace detail {

class IndependenceBackend {
 public:
  virtual ~IndependenceBackend() = default;
  // nullopt if addable, else the circuit minus `e`.
  virtual std::optional<std::vector<EdgeId>> circuit_with(EdgeId e) = 0;
  virtual bool can_add(EdgeId e) { return !circuit_with(e).has_value(); }
  virtual void add(EdgeId e) = 0;
  virtual void remove(EdgeId e) = 0;
};

namespace {

// b = -2a: no edge is ever independent.
class NoEdgeBackend final : public IndependenceBackend {
 public:
  std::optional<std::vector<EdgeId>> circuit_with(EdgeId) override {
    return std::vector<EdgeId>{};
  }
  bool can_add(EdgeId) override { return false; }
  void add(EdgeId) override { throw DomainError("no edge is independent here"); }
  void remove(EdgeId) override {}
};

// -2a < b <= 0.
class PebbleBackend final : public IndependenceBackend {
 public:
  PebbleBackend(const Graph& host, int a, int b) : game_(host, a, -b) {}

  std::optional<std::vector<EdgeId>> circuit_with(EdgeId e) override {
    if (game_.try_gather(e)) return std::nullopt;
    return game_.blocking_edges(e);
  }
  bool can_add(EdgeId e) override { return game_.try_gather(e); }
  void add(EdgeId e) override { game_.insert(e); }
  void remove(EdgeId e) override { game_.erase(e); }

 private:
  PebbleGame game_;
};

// b > 0: a min-cut through the new edge's endpoints.
class CutBackend final : public IndependenceBackend {
 public:
  CutBackend(const Graph& host, int a, int b)
      : host_(&host), a_(a), b_(b), member_(host.num_edges(), false) {}

  std::optional<std::vector<EdgeId>> circuit_with(EdgeId e) override {
    auto with_e = member_;
    with_e[e] = true;
    const EdgeSet candidate = EdgeSet::from_mask(*host_, with_e);
    const Graph sub = host_->edge_subgraph(candidate);
    const Edge& edge = host_->edge(e);
    const Violation viol = max_violation_through(sub, edge.u, edge.v, Rational(a_));
    if (viol.value <= b_) return std::nullopt;
    const auto inside = viol.witness.mask();
    std::vector<EdgeId> circuit;
    for (EdgeId f : candidate) {
      const Edge& fe = host_->edge(f);
      if (f != e && inside[fe.u] && inside[fe.v]) circuit.push_back(f);
    }
    return circuit;
  }
  void add(EdgeId e) override { member_[e] = true; }
  void remove(EdgeId e) override { member_[e] = false; }

 private:
  const Graph* host_;
  int a_;
  int b_;
  std::vector<bool> member_;
};

}  // namespace
}  // namespace detail

namespace {

void check_host(const Graph& host, const EdgeSet& s) {
  if (s.host_edge_count() != host.num_edges()) {
    throw DomainError("edge set belongs to a different host");
  }
}

}  // namespace

CountMatroidOracle::CountMatroidOracle(Graph host, int a, int b)
    : host_(std::make_shared<const Graph>(std::move(host))), a_(a), b_(b) {
  if (a < 1) throw DomainError("count matroid needs a >= 1, got " + std::to_string(a));
  if (b < -2 * a) {
    throw DomainError("count matroid needs b >= -2a, got a=" + std::to_string(a) +
                      ", b=" + std::to_string(b));
  }
}

CountMatroidOracle make_oracle(const Graph& host, int a, int b) {
  return CountMatroidOracle(host, a, b);
}

bool CountMatroidOracle::is_independent(const EdgeSet& s) const {
  check_host(*host_, s);
  if (s.empty()) return true;
  const SparsityParams p = params();
  if (p.pathological()) return false;
  return is_sparse(host_->edge_subgraph(s), p).sparse();
}

int CountMatroidOracle::rank(const EdgeSet& s) const {
  return greedy_basis(s).size();
}

EdgeSet CountMatroidOracle::greedy_basis(const EdgeSet& s) const {
  check_host(*host_, s);
  IndependentSet set(*this);
  for (EdgeId e : s) {
    if (set.can_add(e)) set.add(e);
  }
  return set.members();
}

std::vector<VertexSet> CountMatroidOracle::find_tight_components(
    const EdgeSet& s) const {
  check_host(*host_, s);
  if (b_ > 0 || b_ < -a_) {
    throw DomainError("tight components need -a <= b <= 0");
  }
  if (!is_independent(s)) throw DomainError("tight components need an independent set");
  const Graph sub = host_->edge_subgraph(s);
  detail::DensityNetwork network(sub, a_, 1);
  std::vector<bool> covered(host_->num_vertices(), false);
  std::vector<VertexSet> out;
  for (const Edge& e : sub.edges()) {
    if (covered[e.u]) continue;
    const std::array<Vertex, 2> forced = {e.u, e.v};
    if (network.solve(forced).value != b_) continue;
    auto component = network.maximal_set();
    for (Vertex v : component) covered[v] = true;
    out.emplace_back(*host_, std::move(component));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& x, const VertexSet& y) {
    return x.vertices().front() < y.vertices().front();
  });
  return out;
}

IndependentSet CountMatroidOracle::empty_set() const { return IndependentSet(*this); }

IndependentSet::IndependentSet(const CountMatroidOracle& oracle)
    : host_(oracle.shared_host()), member_(host_->num_edges(), false) {
  const int a = oracle.a();
  const int b = oracle.b();
  if (b == -2 * a) {
    backend_ = std::make_unique<detail::NoEdgeBackend>();
  } else if (b <= 0) {
    backend_ = std::make_unique<detail::PebbleBackend>(*host_, a, b);
  } else {
    backend_ = std::make_unique<detail::CutBackend>(*host_, a, b);
  }
}

IndependentSet::IndependentSet(IndependentSet&&) noexcept = default;
IndependentSet& IndependentSet::operator=(IndependentSet&&) noexcept = default;
IndependentSet::~IndependentSet() = default;

EdgeSet IndependentSet::members() const { return EdgeSet::from_mask(*host_, member_); }

void IndependentSet::check_edge(EdgeId e) const {
  if (e < 0 || e >= static_cast<EdgeId>(member_.size())) {
    throw DomainError("edge id " + std::to_string(e) + " is not in the host");
  }
}

bool IndependentSet::can_add(EdgeId e) {
  check_edge(e);
  if (member_[e]) return false;
  return backend_->can_add(e);
}

std::optional<std::vector<EdgeId>> IndependentSet::circuit_with(EdgeId e) {
  check_edge(e);
  if (member_[e]) throw DomainError("edge already in the independent set");
  return backend_->circuit_with(e);
}

void IndependentSet::add(EdgeId e) {
  check_edge(e);
  if (member_[e]) throw DomainError("edge already in the independent set");
  backend_->add(e);
  member_[e] = true;
  ++size_;
}

void IndependentSet::remove(EdgeId e) {
  check_edge(e);
  if (!member_[e]) throw DomainError("edge not in the independent set");
  backend_->remove(e);
  member_[e] = false;
  --size_;
}

}  // namespace sforge
