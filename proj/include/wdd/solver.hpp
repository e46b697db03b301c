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
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wdd/dag.hpp"
#include "wdd/linext.hpp"
#include "wdd/reachability.hpp"
#include "wdd/topo.hpp"

namespace wdd {

// A set of linear extensions whose intersection is exactly the poset.
struct Realizer {
  std::vector<TopoOrder> members;

  size_t dimension() const { return members.size(); }
};

// Evaluation of the fip upper bounds for an exactly solved instance.
struct BoundCheck {
  uint64_t inc = 0;
  uint64_t min_fip = 0;
  int dim = 0;
  int64_t lemma1_bound = 0;  // inc - (dim - 2)
  int64_t lemma2_bound = 0;  // inc - ceil(2 * inc / dim)
  bool fact2_ok = false;     // min_fip <= inc
  bool lemma1_ok = false;
  bool lemma2_ok = false;

  bool all_ok() const { return fact2_ok && lemma1_ok && lemma2_ok; }
};

// Everything a solve produces. Fields a subcommand does not compute stay
// unset and serialize as null.
struct SolveReport {
  uint64_t inc = 0;
  std::optional<uint64_t> led;
  std::optional<std::pair<TopoOrder, TopoOrder>> diametral_pair;
  std::optional<uint64_t> min_fip;
  std::optional<int> dim;
  std::optional<BoundCheck> bounds;
  std::string method;  // "exact" | "heuristic"
  std::vector<std::pair<std::string, double>> timings_ms;
};

struct LedResult {
  uint64_t led = 0;
  std::pair<TopoOrder, TopoOrder> pair;
};

// Maximum pairwise distance over all extension pairs, with the witnessing
// pair that is lexicographically smallest in the enumeration order. Stops
// early once the distance reaches inc. Throws ExtensionCapExceeded when the
// extension set does not fit under cap.
LedResult led_exact(const Reachability& r, uint64_t cap);

// Exact minimum fip count, computed two independent ways and cross-checked:
// a direct minimum of closure-counted fips over all extension pairs, and
// inc - led. The report carries the optimal drawing pair (the diametral
// pair), the dimension when the realizer search completes, and bound checks.
SolveReport minfip_exact(const Dag& g, uint64_t cap);

// Smallest subset of e whose intersection equals the poset, found by
// branch-and-bound set cover over reversed incomparable pairs (greedy upper
// bound, iterative deepening below it). Throws TruncatedInput when e is
// incomplete and DimExceedsMax when no realizer of size <= max_dim exists.
Realizer minimum_realizer(const Reachability& r, const ExtensionSet& e,
                          int max_dim);
int dimension_exact(const Reachability& r, const ExtensionSet& e, int max_dim);

// Evaluates both fip upper bounds plus the inc bound for a report with
// exact min_fip and dim. Throws MissingDim when dim is absent.
BoundCheck verify_bounds(const SolveReport& report);

// Uniformly random minimal-element construction of one linear extension.
TopoOrder random_extension(const Reachability& r, std::mt19937_64& rng);

// One accepted hill-climbing move: an adjacent transposition at position
// pos (0-based) of order tx (axis 0) or ty (axis 1).
struct ClimbMove {
  int axis = 0;
  uint32_t pos = 0;
};

struct ClimbResult {
  TopoOrder tx;
  TopoOrder ty;
  uint64_t dist = 0;
  std::vector<ClimbMove> steps;
};

// Climbs to a local maximum of the pair distance. Every improving adjacent
// transposition gains exactly one, so taking the first improving move in a
// fixed scan order is a steepest-ascent step.
ClimbResult hill_climb(const Reachability& r, TopoOrder tx, TopoOrder ty);

// Restarted hill climbing from seeded random extension pairs. Maximizing
// distance minimizes fips (fip = inc - dist). Deterministic for a fixed
// seed: restart k derives its generator from seed + k, and ties between
// equal-distance results go to the lexicographically smaller pair.
SolveReport minfip_heuristic(const Dag& g, uint32_t restarts, uint64_t seed);

}  // namespace wdd
