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

#include "wdd/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "wdd/drawing.hpp"
#include "wdd/errors.hpp"
#include "wdd/kernels.hpp"

namespace wdd {
namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Rank arrays of all extensions in one contiguous block, row per extension.
struct RankMatrix {
  size_t n = 0;
  std::vector<uint32_t> data;

  explicit RankMatrix(const ExtensionSet& e)
      : n(e.extensions.empty() ? 0 : e.extensions[0].size()) {
    data.reserve(n * e.size());
    for (const TopoOrder& t : e.extensions) {
      data.insert(data.end(), t.ranks().begin(), t.ranks().end());
    }
  }
  const uint32_t* row(size_t i) const { return data.data() + i * n; }
};

ExtensionSet enumerate_complete(const Reachability& r, uint64_t cap) {
  ExtensionSet e = enumerate_extensions(r, cap);
  if (e.truncated) {
    throw ExtensionCapExceeded("more than " + std::to_string(cap) +
                               " linear extensions");
  }
  return e;
}

LedResult led_over(const Reachability& r, const ExtensionSet& e) {
  const size_t m = e.size();
  const RankMatrix ranks(e);
  const uint64_t inc = count_incomparable(r);

  LedResult best{0, {e.extensions[0], e.extensions[0]}};
  size_t bi = 0, bj = 0;
  for (size_t i = 0; i < m && best.led < inc; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const uint64_t d = kernels::count_discordant(ranks.row(i), ranks.row(j),
                                                   ranks.n);
      if (d > best.led) {
        best.led = d;
        bi = i;
        bj = j;
        if (d == inc) break;  // nothing can be farther apart
      }
    }
  }
  best.pair = {e.extensions[bi], e.extensions[bj]};
  return best;
}

}  // namespace

LedResult led_exact(const Reachability& r, uint64_t cap) {
  return led_over(r, enumerate_complete(r, cap));
}

namespace {

// Direct search: minimum closure-counted fip over all extension pairs.
// Deliberately independent of the inc - led identity it is checked against.
uint64_t min_fip_direct(const Reachability& r, const ExtensionSet& e) {
  const size_t m = e.size();
  uint64_t best = count_incomparable(r);  // the diagonal pair (L, L)
  for (size_t i = 0; i < m && best > 0; ++i) {
    const auto& rx = e.extensions[i].ranks();
    for (size_t j = i + 1; j < m; ++j) {
      const uint64_t f = count_fips(r, rx, e.extensions[j].ranks());
      if (f < best) {
        best = f;
        if (best == 0) break;
      }
    }
  }
  return best;
}

}  // namespace

SolveReport minfip_exact(const Dag& g, uint64_t cap) {
  SolveReport report;
  report.method = "exact";
  const auto t_total = Clock::now();

  auto t0 = Clock::now();
  const Reachability r = transitive_closure(g);
  report.inc = count_incomparable(r);
  report.timings_ms.emplace_back("closure", ms_since(t0));

  t0 = Clock::now();
  const ExtensionSet e = enumerate_complete(r, cap);
  report.timings_ms.emplace_back("enumeration", ms_since(t0));

  t0 = Clock::now();
  LedResult led = led_over(r, e);
  report.led = led.led;
  report.diametral_pair = std::move(led.pair);
  report.timings_ms.emplace_back("led", ms_since(t0));

  t0 = Clock::now();
  const uint64_t direct = min_fip_direct(r, e);
  if (direct != report.inc - *report.led) {
    throw Error("exact fip minimum disagrees with inc - led");
  }
  report.min_fip = direct;
  report.timings_ms.emplace_back("min_fip", ms_since(t0));

  t0 = Clock::now();
  const int max_dim = static_cast<int>(std::max<size_t>(g.vertex_count(), 1));
  try {
    report.dim = dimension_exact(r, e, max_dim);
  } catch (const DimExceedsMax&) {
    // Dimension stays unavailable; bounds cannot be evaluated.
  }
  report.timings_ms.emplace_back("dim", ms_since(t0));

  if (report.dim) {
    report.bounds = verify_bounds(report);
  }
  report.timings_ms.emplace_back("total", ms_since(t_total));
  return report;
}

namespace {

// Set-cover view of the realizer search. Universe: ordered incomparable
// pairs. An extension covers (u, v) when it puts v before u; a subset of
// extensions is a realizer iff it covers everything.
struct CoverInstance {
  size_t universe = 0;                    // 2 * inc
  size_t words = 0;
  std::vector<std::vector<uint64_t>> masks;  // deduplicated, maximal
  std::vector<uint32_t> owner;               // extension index per mask
};

CoverInstance build_cover(const Reachability& r, const ExtensionSet& e) {
  CoverInstance inst;
  inst.universe = 2 * r.inc_pairs.size();
  inst.words = (inst.universe + 63) / 64;

  std::vector<std::vector<uint64_t>> raw(e.size());
  for (size_t i = 0; i < e.size(); ++i) {
    const auto& ranks = e.extensions[i].ranks();
    std::vector<uint64_t> mask(inst.words, 0);
    for (size_t p = 0; p < r.inc_pairs.size(); ++p) {
      const auto [u, v] = r.inc_pairs[p];
      // Element 2p is (u, v), covered by v-before-u; 2p + 1 is (v, u).
      const size_t bit = ranks[v] < ranks[u] ? 2 * p : 2 * p + 1;
      mask[bit / 64] |= uint64_t{1} << (bit % 64);
    }
    raw[i] = std::move(mask);
  }

  // Keep only maximal coverage sets: a dominated extension never helps a
  // minimum cover. Ties keep the smallest extension index.
  auto subset_of = [&](const std::vector<uint64_t>& a,
                       const std::vector<uint64_t>& b) {
    for (size_t w = 0; w < inst.words; ++w) {
      if (a[w] & ~b[w]) return false;
    }
    return true;
  };
  for (uint32_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (size_t k = 0; k < inst.masks.size() && !dominated; ++k) {
      dominated = subset_of(raw[i], inst.masks[k]);
    }
    if (dominated) continue;
    // Remove previously kept masks this one dominates.
    for (size_t k = inst.masks.size(); k-- > 0;) {
      if (subset_of(inst.masks[k], raw[i])) {
        inst.masks.erase(inst.masks.begin() + k);
        inst.owner.erase(inst.owner.begin() + k);
      }
    }
    inst.masks.push_back(raw[i]);
    inst.owner.push_back(i);
  }
  return inst;
}

uint64_t count_uncovered(const std::vector<uint64_t>& covered,
                         const CoverInstance& inst) {
  uint64_t bits = 0;
  for (uint64_t w : covered) bits += std::popcount(w);
  return inst.universe - bits;
}

// Greedy cover, used as the upper bound for iterative deepening.
std::vector<uint32_t> greedy_cover(const CoverInstance& inst) {
  std::vector<uint64_t> covered(inst.words, 0);
  std::vector<uint32_t> chosen;
  while (count_uncovered(covered, inst) > 0) {
    size_t best = inst.masks.size();
    uint64_t best_gain = 0;
    for (size_t k = 0; k < inst.masks.size(); ++k) {
      uint64_t gain = 0;
      for (size_t w = 0; w < inst.words; ++w) {
        gain += std::popcount(inst.masks[k][w] & ~covered[w]);
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (best == inst.masks.size()) break;  // uncoverable element
    for (size_t w = 0; w < inst.words; ++w) covered[w] |= inst.masks[best][w];
    chosen.push_back(static_cast<uint32_t>(best));
  }
  return chosen;
}

// Masks covering each universe element, precomputed for the search.
std::vector<std::vector<uint32_t>> candidates_by_element(
    const CoverInstance& inst) {
  std::vector<std::vector<uint32_t>> by_element(inst.universe);
  for (uint32_t k = 0; k < inst.masks.size(); ++k) {
    for (size_t b = 0; b < inst.universe; ++b) {
      if ((inst.masks[k][b / 64] >> (b % 64)) & 1) by_element[b].push_back(k);
    }
  }
  return by_element;
}

// Depth-limited exact cover search. Branches on the uncovered element with
// the fewest usable masks. When a candidate branch fails, that mask cannot
// be part of any cover below this node (a cover using it would have been
// found inside its own branch), so it stays banned for the rest of the
// subtree.
bool cover_search(const CoverInstance& inst,
                  const std::vector<std::vector<uint32_t>>& by_element,
                  std::vector<uint64_t>& covered, std::vector<uint8_t>& banned,
                  int depth_left, std::vector<uint32_t>& chosen) {
  size_t element = inst.universe;
  size_t element_options = inst.masks.size() + 1;
  for (size_t b = 0; b < inst.universe; ++b) {
    if ((covered[b / 64] >> (b % 64)) & 1) continue;
    size_t options = 0;
    for (uint32_t k : by_element[b]) options += !banned[k];
    if (options < element_options) {
      element_options = options;
      element = b;
      if (options == 0) break;
    }
  }
  if (element == inst.universe) return true;  // everything covered
  if (depth_left == 0 || element_options == 0) return false;

  std::vector<uint32_t> banned_here;
  bool found = false;
  for (uint32_t k : by_element[element]) {
    if (banned[k]) continue;
    std::vector<uint64_t> next = covered;
    for (size_t w = 0; w < inst.words; ++w) next[w] |= inst.masks[k][w];
    chosen.push_back(k);
    if (cover_search(inst, by_element, next, banned, depth_left - 1, chosen)) {
      found = true;
      break;
    }
    chosen.pop_back();
    banned[k] = 1;
    banned_here.push_back(k);
  }
  for (uint32_t k : banned_here) banned[k] = 0;
  return found;
}

}  // namespace

Realizer minimum_realizer(const Reachability& r, const ExtensionSet& e,
                          int max_dim) {
  if (e.truncated) {
    throw TruncatedInput("realizer search needs the complete extension set");
  }
  if (max_dim < 1) throw std::invalid_argument("max_dim must be >= 1");

  if (r.inc_pairs.empty()) {
    // Total order (or empty poset): the single extension realizes it.
    return Realizer{{e.extensions.at(0)}};
  }

  const CoverInstance inst = build_cover(r, e);
  const std::vector<uint32_t> greedy = greedy_cover(inst);
  {
    // Complete extension sets can reverse every incomparable pair, so the
    // greedy cover must close.
    std::vector<uint64_t> covered(inst.words, 0);
    for (uint32_t k : greedy) {
      for (size_t w = 0; w < inst.words; ++w) covered[w] |= inst.masks[k][w];
    }
    if (count_uncovered(covered, inst) != 0) {
      throw Error("incomparable pair not reversible by any extension");
    }
  }
  const int upper = static_cast<int>(greedy.size());

  auto to_realizer = [&](const std::vector<uint32_t>& mask_ids) {
    std::vector<uint32_t> ext_ids;
    ext_ids.reserve(mask_ids.size());
    for (uint32_t k : mask_ids) ext_ids.push_back(inst.owner[k]);
    std::sort(ext_ids.begin(), ext_ids.end());
    Realizer real;
    for (uint32_t id : ext_ids) real.members.push_back(e.extensions[id]);
    return real;
  };

  const std::vector<std::vector<uint32_t>> by_element =
      candidates_by_element(inst);
  for (int d = 2; d <= std::min(upper - 1, max_dim); ++d) {
    std::vector<uint64_t> covered(inst.words, 0);
    std::vector<uint8_t> banned(inst.masks.size(), 0);
    std::vector<uint32_t> chosen;
    if (cover_search(inst, by_element, covered, banned, d, chosen)) {
      return to_realizer(chosen);
    }
  }
  if (upper <= max_dim) return to_realizer(greedy);
  throw DimExceedsMax(max_dim + 1,
                      "dimension exceeds " + std::to_string(max_dim) +
                          "; no realizer of that size exists");
}

int dimension_exact(const Reachability& r, const ExtensionSet& e,
                    int max_dim) {
  return static_cast<int>(minimum_realizer(r, e, max_dim).dimension());
}

BoundCheck verify_bounds(const SolveReport& report) {
  if (!report.dim) {
    throw MissingDim("bound verification needs an exact dimension");
  }
  if (!report.min_fip) {
    throw Error("bound verification needs an exact min_fip");
  }
  BoundCheck check;
  check.inc = report.inc;
  check.min_fip = *report.min_fip;
  check.dim = *report.dim;

  const int64_t inc = static_cast<int64_t>(check.inc);
  const int64_t dim = check.dim;
  const int64_t min_fip = static_cast<int64_t>(check.min_fip);
  check.lemma1_bound = inc - (dim - 2);
  check.lemma2_bound = inc - (2 * inc + dim - 1) / dim;  // ceil(2*inc/dim)
  check.fact2_ok = min_fip <= inc;
  check.lemma1_ok = min_fip <= check.lemma1_bound;
  check.lemma2_ok = min_fip <= check.lemma2_bound;
  return check;
}

TopoOrder random_extension(const Reachability& r, std::mt19937_64& rng) {
  const size_t n = r.vertex_count();

  // Unbiased bounded draw by rejection; kept local so results do not depend
  // on a standard library's distribution implementation.
  auto draw = [&rng](uint64_t bound) -> uint64_t {
    const uint64_t limit = bound * (std::numeric_limits<uint64_t>::max() / bound);
    uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };

  std::vector<uint32_t> unplaced_preds(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (r.reachable(u, v)) ++unplaced_preds[v];
    }
  }
  std::vector<Vertex> available;
  for (Vertex v = 0; v < n; ++v) {
    if (unplaced_preds[v] == 0) available.push_back(v);
  }

  std::vector<Vertex> seq;
  seq.reserve(n);
  while (!available.empty()) {
    const size_t pick = static_cast<size_t>(draw(available.size()));
    const Vertex u = available[pick];
    available.erase(available.begin() + pick);
    seq.push_back(u);
    for (Vertex v = 0; v < n; ++v) {
      if (r.reachable(u, v) && --unplaced_preds[v] == 0) {
        available.push_back(v);
      }
    }
  }
  return TopoOrder::from_sequence(seq);
}

ClimbResult hill_climb(const Reachability& r, TopoOrder tx, TopoOrder ty) {
  const size_t n = r.vertex_count();
  ClimbResult result;
  result.dist = n == 0 ? 0
                       : kernels::count_discordant(tx.ranks().data(),
                                                   ty.ranks().data(), n);

  std::vector<Vertex> seq[2] = {tx.sequence(), ty.sequence()};
  std::vector<uint32_t> rank[2] = {tx.ranks(), ty.ranks()};

  // Swapping adjacent u, v in one order is legal iff they are incomparable,
  // and it gains distance iff the other order currently agrees with this
  // one on {u, v}.
  bool improved = true;
  while (improved) {
    improved = false;
    for (int axis = 0; axis < 2; ++axis) {
      const int other = 1 - axis;
      for (uint32_t p = 0; p + 1 < n; ++p) {
        const Vertex u = seq[axis][p];
        const Vertex v = seq[axis][p + 1];
        if (r.comparable(u, v)) continue;
        if (rank[other][u] >= rank[other][v]) continue;  // already opposed
        std::swap(seq[axis][p], seq[axis][p + 1]);
        std::swap(rank[axis][u], rank[axis][v]);
        ++result.dist;
        result.steps.push_back({axis, p});
        improved = true;
      }
    }
  }
  result.tx = TopoOrder::from_ranks(std::move(rank[0]));
  result.ty = TopoOrder::from_ranks(std::move(rank[1]));
  return result;
}

SolveReport minfip_heuristic(const Dag& g, uint32_t restarts, uint64_t seed) {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  SolveReport report;
  report.method = "heuristic";
  const auto t_total = Clock::now();

  const Reachability r = transitive_closure(g);
  report.inc = count_incomparable(r);

  struct Best {
    uint64_t dist = 0;
    TopoOrder tx, ty;
    std::vector<Vertex> sx, sy;
    bool set = false;
  } best;

  // Merge rule is associative and order-independent (max distance, then the
  // lexicographically smaller pair), so restarts could run in any order or
  // in parallel and produce the same result.
  auto offer = [&best](ClimbResult&& c) {
    std::vector<Vertex> sx = c.tx.sequence();
    std::vector<Vertex> sy = c.ty.sequence();
    const bool better =
        !best.set || c.dist > best.dist ||
        (c.dist == best.dist &&
         std::tie(sx, sy) < std::tie(best.sx, best.sy));
    if (better) {
      best = {c.dist, std::move(c.tx), std::move(c.ty), std::move(sx),
              std::move(sy), true};
    }
  };

  for (uint32_t k = 0; k < restarts; ++k) {
    std::mt19937_64 rng(seed + k);
    TopoOrder tx = random_extension(r, rng);
    TopoOrder ty = random_extension(r, rng);
    offer(hill_climb(r, std::move(tx), std::move(ty)));
  }

  report.led = best.dist;
  report.diametral_pair = {best.tx, best.ty};
  report.min_fip = count_fips(r, best.tx.ranks(), best.ty.ranks());
  report.timings_ms.emplace_back("total", ms_since(t_total));
  return report;
}

}  // namespace wdd
