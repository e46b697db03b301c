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
#include <vector>

#include "wdd/dag.hpp"
#include "wdd/reachability.hpp"
#include "wdd/topo.hpp"

namespace wdd {

// The linear extensions of a poset, in lexicographic order of their vertex
// sequences. When enumeration stopped at the cap the set is marked truncated
// and holds exactly cap extensions.
struct ExtensionSet {
  std::vector<TopoOrder> extensions;
  bool truncated = false;

  size_t size() const { return extensions.size(); }
};

// Recursive minimal-element enumeration in increasing id order, which yields
// the lexicographic sequence order directly. cap must be >= 1; hitting it is
// reported through the truncated flag, not an error.
ExtensionSet enumerate_extensions(const Reachability& r, uint64_t cap);

// Counts linear extensions as maximal chains of the downset lattice,
// independently of enumerate_extensions. state_cap bounds the number of
// distinct downsets visited. Throws StateCapExceeded, CountOverflow.
uint64_t count_extensions(const Reachability& r, uint64_t state_cap);

// Number of unordered pairs ordered oppositely by the two extensions. Such
// pairs are necessarily incomparable in r. Throws InvalidOrder when either
// order is not an extension of r.
uint64_t distance(const TopoOrder& a, const TopoOrder& b,
                  const Reachability& r);

// Graph over all extensions of a poset; two extensions are adjacent iff they
// differ by a single adjacent transposition.
struct LinExtGraph {
  ExtensionSet nodes;
  std::vector<std::vector<uint32_t>> adjacency;  // sorted neighbor lists
  uint64_t edge_count = 0;

  size_t node_count() const { return nodes.size(); }
};

// Throws TruncatedInput when e is not complete.
LinExtGraph build_linext_graph(const ExtensionSet& e);

// BFS shortest-path length between two nodes. Throws IndexOutOfRange.
uint64_t graph_distance(const LinExtGraph& g, uint32_t i, uint32_t j);

// "i j" per edge (i < j), preceded by a size header comment.
std::string export_edges(const LinExtGraph& g);

// "index extension-string" per node, labels concatenated in sequence order.
std::string export_node_map(const LinExtGraph& g, const Dag& dag);

}  // namespace wdd
