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

#include <string>
#include <string_view>

#include "wdd/dag.hpp"
#include "wdd/reachability.hpp"
#include "wdd/topo.hpp"

namespace wdd {

// A weak dominance drawing: vertex v sits at integer grid point
// (tx.rank(v), ty.rank(v)). Every reachable pair is dominated by
// construction; the fips are the incomparable pairs that end up dominated
// anyway.
struct Drawing {
  Dag dag;
  TopoOrder tx;
  TopoOrder ty;
  std::vector<Edge> fips;  // unordered pairs, u < v, sorted

  uint32_t x(Vertex v) const { return tx.rank(v); }
  uint32_t y(Vertex v) const { return ty.rank(v); }
  uint64_t fip_count() const { return fips.size(); }
};

// Builds the drawing for an order pair; throws InvalidOrder if either
// permutation violates an edge. The second form reuses a precomputed closure.
Drawing make_drawing(const Dag& g, TopoOrder tx, TopoOrder ty);
Drawing make_drawing(const Dag& g, const Reachability& r, TopoOrder tx,
                     TopoOrder ty);

uint64_t count_fips(const Drawing& d);

// Counts fips for an order pair directly against the closure, without
// materializing the pair list. rx/ry are 1-based rank arrays.
uint64_t count_fips(const Reachability& r, const std::vector<uint32_t>& rx,
                    const std::vector<uint32_t>& ry);

// |I| = #{ordered pairs (u, v) : tx(u) < tx(v) and ty(u) < ty(v)}.
uint64_t intersection_cardinality(const Dag& g, const TopoOrder& tx,
                                  const TopoOrder& ty);

// The drawing with tx = ty = topological_sort(g); realizes fip = inc exactly.
Drawing diagonal_drawing(const Dag& g);

// True iff the drawing has no fips, i.e. coordinates characterize the
// closure exactly.
bool is_dominance_drawing(const Drawing& d);

// Renders the drawing. Formats: "coords" (one "label X Y" line per vertex,
// sorted by id) and "svg" (grid drawing; edges solid, fips bold dashed).
// Both are byte-deterministic. Throws UnknownFormat.
std::string emit_drawing(const Drawing& d, std::string_view format);

}  // namespace wdd
