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
#include <vector>

#include "wdd/dag.hpp"
#include "wdd/topo.hpp"

namespace wdd {

// Row-major n x n bit matrix; row u holds the successor set of u.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n_ * words_, 0) {}

  size_t size() const { return n_; }
  size_t words_per_row() const { return words_; }

  bool get(Vertex u, Vertex v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1;
  }
  void set(Vertex u, Vertex v) {
    bits_[u * words_ + v / 64] |= uint64_t{1} << (v % 64);
  }

  uint64_t* row(Vertex u) { return bits_.data() + u * words_; }
  const uint64_t* row(Vertex u) const { return bits_.data() + u * words_; }

  bool operator==(const BitMatrix&) const = default;

 private:
  size_t n_ = 0;
  size_t words_ = 0;
  std::vector<uint64_t> bits_;
};

// Transitive closure G* of a Dag together with the derived incomparable-pair
// set. This is also the poset view of the graph: u < v iff reachable(u, v).
struct Reachability {
  BitMatrix closure;
  uint64_t closure_edge_count = 0;  // |E*|
  std::vector<Edge> inc_pairs;      // unordered pairs, stored with u < v

  size_t vertex_count() const { return closure.size(); }
  bool reachable(Vertex u, Vertex v) const { return closure.get(u, v); }
  bool comparable(Vertex u, Vertex v) const {
    return closure.get(u, v) || closure.get(v, u);
  }
};

// closure(u, v) is true iff v is reachable from u by a nonempty path.
Reachability transitive_closure(const Dag& g);

// inc(G) = n(n-1)/2 - |E*|; always equals r.inc_pairs.size().
uint64_t count_incomparable(const Reachability& r);

// True iff the order ranks every reachable pair correctly, i.e. it is a
// linear extension of the poset.
bool is_extension_of(const Reachability& r, const TopoOrder& t);

// Throws InvalidOrder when t is not an extension of r.
void require_extension_of(const Reachability& r, const TopoOrder& t);

}  // namespace wdd
