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

#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "wdd/dag.hpp"

namespace wdd {

// A topological sorting: a bijection vertex -> rank in 1..n. Whether the
// order respects a particular graph is checked separately (respects,
// require_respects); bijectivity is a construction invariant.
class TopoOrder {
 public:
  TopoOrder() = default;

  // Throws InvalidOrder unless ranks is a permutation of 1..n.
  static TopoOrder from_ranks(std::vector<uint32_t> ranks);
  // Throws InvalidOrder unless seq lists every vertex exactly once.
  static TopoOrder from_sequence(const std::vector<Vertex>& seq);

  size_t size() const { return ranks_.size(); }
  uint32_t rank(Vertex v) const { return ranks_[v]; }
  const std::vector<uint32_t>& ranks() const { return ranks_; }

  // Vertices by increasing rank.
  std::vector<Vertex> sequence() const;

  bool operator==(const TopoOrder&) const = default;

 private:
  std::vector<uint32_t> ranks_;
};

// Deterministic topological sorting: repeatedly removes the smallest-id
// source (Kahn with a min-id tie-break).
TopoOrder topological_sort(const Dag& g);

// True iff rank(u) < rank(v) for every edge (u, v) of g.
bool respects(const Dag& g, const TopoOrder& t);

// Throws InvalidOrder when the order does not fit g.
void require_respects(const Dag& g, const TopoOrder& t);

}  // namespace wdd
