// Copyright 2026 The wdd authors
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

#include "wdd/topo.hpp"

#include <functional>
#include <queue>

#include "wdd/errors.hpp"

namespace wdd {

TopoOrder TopoOrder::from_ranks(std::vector<uint32_t> ranks) {
  const size_t n = ranks.size();
  std::vector<bool> seen(n, false);
  for (uint32_t r : ranks) {
    if (r < 1 || r > n || seen[r - 1]) {
      throw InvalidOrder("ranks are not a permutation of 1..n");
    }
    seen[r - 1] = true;
  }
  TopoOrder t;
  t.ranks_ = std::move(ranks);
  return t;
}

TopoOrder TopoOrder::from_sequence(const std::vector<Vertex>& seq) {
  const size_t n = seq.size();
  std::vector<uint32_t> ranks(n, 0);
  for (size_t pos = 0; pos < n; ++pos) {
    Vertex v = seq[pos];
    if (v >= n || ranks[v] != 0) {
      throw InvalidOrder("sequence is not a permutation of the vertices");
    }
    ranks[v] = static_cast<uint32_t>(pos + 1);
  }
  TopoOrder t;
  t.ranks_ = std::move(ranks);
  return t;
}

std::vector<Vertex> TopoOrder::sequence() const {
  std::vector<Vertex> seq(ranks_.size());
  for (Vertex v = 0; v < ranks_.size(); ++v) {
    seq[ranks_[v] - 1] = v;
  }
  return seq;
}

TopoOrder topological_sort(const Dag& g) {
  const size_t n = g.vertex_count();
  std::vector<uint32_t> indegree(n, 0);
  for (const auto& [u, v] : g.edges()) ++indegree[v];

  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> sources;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) sources.push(v);
  }
  std::vector<uint32_t> ranks(n, 0);
  uint32_t next_rank = 1;
  while (!sources.empty()) {
    Vertex u = sources.top();
    sources.pop();
    ranks[u] = next_rank++;
    for (Vertex v : g.successors()[u]) {
      if (--indegree[v] == 0) sources.push(v);
    }
  }
  // Dag guarantees acyclicity, so every vertex got a rank.
  return TopoOrder::from_ranks(std::move(ranks));
}

bool respects(const Dag& g, const TopoOrder& t) {
  if (t.size() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (t.rank(u) >= t.rank(v)) return false;
  }
  return true;
}

void require_respects(const Dag& g, const TopoOrder& t) {
  if (!respects(g, t)) {
    throw InvalidOrder("permutation violates an edge of the graph");
  }
}

}  // namespace wdd
