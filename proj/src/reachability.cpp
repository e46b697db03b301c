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

#include "wdd/reachability.hpp"

#include "wdd/errors.hpp"
#include "wdd/kernels.hpp"

namespace wdd {

Reachability transitive_closure(const Dag& g) {
  const size_t n = g.vertex_count();
  Reachability r;
  r.closure = BitMatrix(n);
  const size_t words = r.closure.words_per_row();

  // In reverse topological order, each row is the union of its direct
  // successors' rows plus the successors themselves. One OR per edge.
  const std::vector<Vertex> order = topological_sort(g).sequence();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex u = *it;
    for (Vertex v : g.successors()[u]) {
      kernels::or_words(r.closure.row(u), r.closure.row(v), words);
      r.closure.set(u, v);
    }
  }

  for (Vertex u = 0; u < n; ++u) {
    r.closure_edge_count += kernels::popcount_words(r.closure.row(u), words);
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!r.comparable(u, v)) r.inc_pairs.emplace_back(u, v);
    }
  }
  return r;
}

uint64_t count_incomparable(const Reachability& r) {
  const uint64_t n = r.vertex_count();
  return n * (n - 1) / 2 - r.closure_edge_count;
}

bool is_extension_of(const Reachability& r, const TopoOrder& t) {
  const size_t n = r.vertex_count();
  if (t.size() != n) return false;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (r.reachable(u, v) && t.rank(u) >= t.rank(v)) return false;
    }
  }
  return true;
}

void require_extension_of(const Reachability& r, const TopoOrder& t) {
  if (!is_extension_of(r, t)) {
    throw InvalidOrder("permutation is not a linear extension of the poset");
  }
}

}  // namespace wdd
