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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdd {

using Vertex = uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Immutable directed acyclic graph on vertices 0..n-1. Construction
// validates the invariants: endpoints in range, no self-loops, acyclic.
// Duplicate edges are dropped; surviving edges are kept sorted.
class Dag {
 public:
  Dag() = default;
  Dag(size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  size_t vertex_count() const { return n_; }
  size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<Vertex>>& successors() const { return out_; }

  bool has_labels() const { return !labels_.empty(); }
  // Stored display label, or the decimal id when none was given.
  std::string label(Vertex v) const;

 private:
  size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::string> labels_;
};

// Parses the edge-list exchange format: one "u v" edge per line, '#' starts
// a comment line, blank lines are ignored, vertex tokens are arbitrary
// non-whitespace strings. Ids are assigned in first-appearance order.
// Throws MalformedLine, SelfLoop, CycleDetected.
Dag parse_edge_list(std::string_view text);

// Renders a Dag back into the edge-list format (sorted edges, labels as
// tokens). Isolated vertices cannot be expressed by the format.
std::string to_edge_list(const Dag& g);

// Crown graph C_k: sources a1..ak, sinks b1..bk, edge ai->bj iff i != j.
Dag gen_crown(uint32_t k);

// Path v0 -> v1 -> ... -> v(n-1).
Dag gen_chain(uint32_t n);

// n vertices, no edges.
Dag gen_antichain(uint32_t n);

// Every pair i < j gets edge i->j independently with probability p, drawn
// from a deterministic generator: same seed, same graph, on any platform.
Dag gen_random_dag(uint32_t n, double p, uint64_t seed);

}  // namespace wdd
