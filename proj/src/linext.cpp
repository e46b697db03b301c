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

#include "wdd/linext.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "wdd/errors.hpp"
#include "wdd/kernels.hpp"

namespace wdd {
namespace {

std::vector<std::vector<Vertex>> closure_successors(const Reachability& r) {
  const size_t n = r.vertex_count();
  std::vector<std::vector<Vertex>> succ(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (r.reachable(u, v)) succ[u].push_back(v);
    }
  }
  return succ;
}

}  // namespace

ExtensionSet enumerate_extensions(const Reachability& r, uint64_t cap) {
  if (cap < 1) throw std::invalid_argument("extension cap must be >= 1");
  const size_t n = r.vertex_count();
  const auto succ = closure_successors(r);

  std::vector<uint32_t> unplaced_preds(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : succ[u]) ++unplaced_preds[v];
  }

  ExtensionSet out;
  std::vector<Vertex> prefix;
  prefix.reserve(n);

  // Returns false once the cap is hit, unwinding the whole search.
  auto recurse = [&](auto&& self) -> bool {
    if (prefix.size() == n) {
      if (out.extensions.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.extensions.push_back(TopoOrder::from_sequence(prefix));
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (unplaced_preds[v] != 0) continue;
      unplaced_preds[v] = std::numeric_limits<uint32_t>::max();  // placed
      prefix.push_back(v);
      for (Vertex w : succ[v]) --unplaced_preds[w];
      const bool keep_going = self(self);
      for (Vertex w : succ[v]) ++unplaced_preds[w];
      prefix.pop_back();
      unplaced_preds[v] = 0;
      if (!keep_going) return false;
    }
    return true;
  };
  recurse(recurse);
  return out;
}

namespace {

// Downsets keyed by their membership bitmask.
struct DownsetKey {
  std::vector<uint64_t> words;
  bool operator==(const DownsetKey&) const = default;
};

struct DownsetKeyHash {
  size_t operator()(const DownsetKey& k) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (uint64_t w : k.words) {
      h ^= w;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

uint64_t count_extensions(const Reachability& r, uint64_t state_cap) {
  if (state_cap < 1) throw std::invalid_argument("state cap must be >= 1");
  const size_t n = r.vertex_count();
  const size_t words = (n + 63) / 64;

  // Predecessor mask per vertex; v can join a downset D iff preds[v] <= D.
  std::vector<std::vector<uint64_t>> preds(n,
                                           std::vector<uint64_t>(words, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (r.reachable(u, v)) preds[v][u / 64] |= uint64_t{1} << (u % 64);
    }
  }

  using Count = unsigned __int128;
  std::unordered_map<DownsetKey, Count, DownsetKeyHash> memo;

  auto count_from = [&](auto&& self, DownsetKey& d, size_t placed) -> Count {
    if (placed == n) return 1;
    if (auto it = memo.find(d); it != memo.end()) return it->second;
    Count total = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((d.words[v / 64] >> (v % 64)) & 1) continue;
      bool addable = true;
      for (size_t w = 0; w < words; ++w) {
        if (preds[v][w] & ~d.words[w]) {
          addable = false;
          break;
        }
      }
      if (!addable) continue;
      d.words[v / 64] ^= uint64_t{1} << (v % 64);
      total += self(self, d, placed + 1);
      d.words[v / 64] ^= uint64_t{1} << (v % 64);
    }
    if (memo.size() >= state_cap) {
      throw StateCapExceeded("downset state count exceeds cap of " +
                             std::to_string(state_cap));
    }
    memo.emplace(d, total);
    return total;
  };

  DownsetKey empty{std::vector<uint64_t>(words, 0)};
  const Count result = count_from(count_from, empty, 0);
  if (result > Count{std::numeric_limits<uint64_t>::max()}) {
    throw CountOverflow("extension count does not fit in 64 bits");
  }
  return static_cast<uint64_t>(result);
}

uint64_t distance(const TopoOrder& a, const TopoOrder& b,
                  const Reachability& r) {
  require_extension_of(r, a);
  require_extension_of(r, b);
  return kernels::count_discordant(a.ranks().data(), b.ranks().data(),
                                   r.vertex_count());
}

namespace {

struct SeqHash {
  size_t operator()(const std::vector<Vertex>& seq) const {
    uint64_t h = 0xcbf29ce484222325ull;
    for (Vertex v : seq) {
      h ^= v;
      h *= 0x100000001b3ull;
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace

LinExtGraph build_linext_graph(const ExtensionSet& e) {
  if (e.truncated) {
    throw TruncatedInput("extension set is truncated; graph needs all nodes");
  }
  LinExtGraph g;
  g.nodes = e;
  const size_t m = e.size();
  g.adjacency.resize(m);

  std::unordered_map<std::vector<Vertex>, uint32_t, SeqHash> index;
  std::vector<std::vector<Vertex>> seqs(m);
  for (uint32_t i = 0; i < m; ++i) {
    seqs[i] = e.extensions[i].sequence();
    index.emplace(seqs[i], i);
  }

  // A swapped neighbor exists in the (complete) set iff the transposition is
  // legal, so membership lookup doubles as the validity test.
  for (uint32_t i = 0; i < m; ++i) {
    std::vector<Vertex> probe = seqs[i];
    const size_t n = probe.size();
    for (size_t p = 0; p + 1 < n; ++p) {
      std::swap(probe[p], probe[p + 1]);
      if (auto it = index.find(probe); it != index.end() && it->second > i) {
        g.adjacency[i].push_back(it->second);
        g.adjacency[it->second].push_back(i);
        ++g.edge_count;
      }
      std::swap(probe[p], probe[p + 1]);
    }
  }
  for (auto& neighbors : g.adjacency) {
    std::sort(neighbors.begin(), neighbors.end());
  }
  return g;
}

uint64_t graph_distance(const LinExtGraph& g, uint32_t i, uint32_t j) {
  const size_t m = g.node_count();
  if (i >= m || j >= m) {
    throw IndexOutOfRange("node index outside the extension graph");
  }
  if (i == j) return 0;
  std::vector<uint32_t> dist(m, std::numeric_limits<uint32_t>::max());
  std::deque<uint32_t> queue{i};
  dist[i] = 0;
  while (!queue.empty()) {
    const uint32_t u = queue.front();
    queue.pop_front();
    for (uint32_t v : g.adjacency[u]) {
      if (dist[v] != std::numeric_limits<uint32_t>::max()) continue;
      dist[v] = dist[u] + 1;
      if (v == j) return dist[v];
      queue.push_back(v);
    }
  }
  // Complete extension graphs are connected; an unreachable node means the
  // input violated the completeness precondition.
  throw TruncatedInput("extension graph is not connected");
}

std::string export_edges(const LinExtGraph& g) {
  std::string out = "# linear extension graph: " +
                    std::to_string(g.node_count()) + " nodes, " +
                    std::to_string(g.edge_count) + " edges\n";
  for (uint32_t i = 0; i < g.node_count(); ++i) {
    for (uint32_t j : g.adjacency[i]) {
      if (j > i) {
        out += std::to_string(i);
        out += ' ';
        out += std::to_string(j);
        out += '\n';
      }
    }
  }
  return out;
}

std::string export_node_map(const LinExtGraph& g, const Dag& dag) {
  std::string out = "# node index -> extension\n";
  for (uint32_t i = 0; i < g.node_count(); ++i) {
    out += std::to_string(i);
    out += ' ';
    for (Vertex v : g.nodes.extensions[i].sequence()) {
      out += dag.label(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace wdd
