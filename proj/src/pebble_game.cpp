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


#include "pebble_game.hpp"

#include <algorithm>

#include "sforge/error.hpp"

namespace sforge::detail {

PebbleGame::PebbleGame(const Graph& host, int k, int l)
    : host_(&host),
      k_(k),
      l_(l),
      pebbles_(host.num_vertices(), k),
      out_(host.num_vertices()),
      tail_(host.num_edges(), -1),
      seen_(host.num_vertices(), 0),
      parent_edge_(host.num_vertices(), -1) {
  if (k < 1 || l < 0 || l >= 2 * k) {
    throw DomainError("pebble game needs k >= 1 and 0 <= l < 2k");
  }
}

void PebbleGame::next_stamp() {
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
}

bool PebbleGame::find_pebble(Vertex root, Vertex blocked) {
  next_stamp();
  seen_[root] = stamp_;
  seen_[blocked] = stamp_;
  stack_.assign(1, root);
  while (!stack_.empty()) {
    const Vertex w = stack_.back();
    stack_.pop_back();
    for (EdgeId e : out_[w]) {
      const Edge& edge = host_->edge(e);
      const Vertex h = edge.u == w ? edge.v : edge.u;
      if (seen_[h] == stamp_) continue;
      seen_[h] = stamp_;
      parent_edge_[h] = e;
      if (pebbles_[h] > 0) {
        // Reverse the path root -> ... -> h so the pebble ends on root.
        for (Vertex cur = h; cur != root;) {
          const EdgeId pe = parent_edge_[cur];
          const Vertex prev = tail_[pe];
          auto& prev_out = out_[prev];
          prev_out.erase(std::find(prev_out.begin(), prev_out.end(), pe));
          out_[cur].push_back(pe);
          tail_[pe] = cur;
          cur = prev;
        }
        --pebbles_[h];
        ++pebbles_[root];
        return true;
      }
      stack_.push_back(h);
    }
  }
  return false;
}

bool PebbleGame::try_gather(EdgeId e) {
  const Edge& edge = host_->edge(e);
  while (pebbles_[edge.u] + pebbles_[edge.v] < l_ + 1) {
    if (find_pebble(edge.u, edge.v)) continue;
    if (find_pebble(edge.v, edge.u)) continue;
    return false;
  }
  return true;
}

void PebbleGame::insert(EdgeId e) {
  if (tail_[e] >= 0) throw DomainError("pebble game: edge already present");
  if (!try_gather(e)) throw DomainError("pebble game: edge is dependent");
  const Edge& edge = host_->edge(e);
  const Vertex tail = pebbles_[edge.u] > 0 ? edge.u : edge.v;
  --pebbles_[tail];
  out_[tail].push_back(e);
  tail_[e] = tail;
}

void PebbleGame::erase(EdgeId e) {
  const Vertex tail = tail_[e];
  if (tail < 0) throw DomainError("pebble game: edge not present");
  auto& out = out_[tail];
  out.erase(std::find(out.begin(), out.end(), e));
  ++pebbles_[tail];
  tail_[e] = -1;
}

std::vector<EdgeId> PebbleGame::blocking_edges(EdgeId e) {
  const Edge& edge = host_->edge(e);
  next_stamp();
  seen_[edge.u] = stamp_;
  seen_[edge.v] = stamp_;
  stack_.assign({edge.u, edge.v});
  std::vector<EdgeId> out;
  while (!stack_.empty()) {
    const Vertex w = stack_.back();
    stack_.pop_back();
    for (EdgeId f : out_[w]) {
      out.push_back(f);
      const Edge& fe = host_->edge(f);
      const Vertex h = fe.u == w ? fe.v : fe.u;
      if (seen_[h] != stamp_) {
        seen_[h] = stamp_;
        stack_.push_back(h);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sforge::detail
