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

#include "wdd/dag.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_map>

#include "wdd/errors.hpp"

namespace wdd {
namespace {

// Kahn's algorithm used purely as the acyclicity check.
void require_acyclic(size_t n, const std::vector<std::vector<Vertex>>& out) {
  std::vector<uint32_t> indegree(n, 0);
  for (const auto& succs : out) {
    for (Vertex v : succs) ++indegree[v];
  }
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (indegree[v] == 0) queue.push_back(v);
  }
  size_t processed = 0;
  while (!queue.empty()) {
    Vertex u = queue.back();
    queue.pop_back();
    ++processed;
    for (Vertex v : out[u]) {
      if (--indegree[v] == 0) queue.push_back(v);
    }
  }
  if (processed != n) {
    throw CycleDetected("edge relation has a directed cycle");
  }
}

}  // namespace

Dag::Dag(size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_) {
    throw Error("label table size does not match vertex count");
  }
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_) {
      throw Error("edge endpoint out of range");
    }
    if (u == v) {
      throw SelfLoop("self-loop at vertex " + std::to_string(u));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  out_.resize(n_);
  for (const auto& [u, v] : edges_) {
    out_[u].push_back(v);
  }
  require_acyclic(n_, out_);
}

std::string Dag::label(Vertex v) const {
  if (v < labels_.size()) return labels_[v];
  return std::to_string(v);
}

Dag parse_edge_list(std::string_view text) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u)) continue;       // blank
    if (u.front() == '#') continue;     // comment line
    if (!(fields >> v)) {
      throw MalformedLine(lineno, "expected two vertex tokens, got one");
    }
    if (fields >> extra) {
      throw MalformedLine(lineno, "expected two vertex tokens, got more");
    }
    if (u == v) {
      throw SelfLoop("line " + std::to_string(lineno) + ": self-loop on \"" +
                     u + "\"");
    }
    const Vertex uid = intern(u);
    const Vertex vid = intern(v);
    edges.emplace_back(uid, vid);
  }
  const size_t n = labels.size();
  return Dag(n, std::move(edges), std::move(labels));
}

std::string to_edge_list(const Dag& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += g.label(u);
    out += ' ';
    out += g.label(v);
    out += '\n';
  }
  return out;
}

Dag gen_crown(uint32_t k) {
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  labels.reserve(2 * static_cast<size_t>(k));
  for (uint32_t i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  for (uint32_t i = 1; i <= k; ++i) labels.push_back("b" + std::to_string(i));
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = 0; j < k; ++j) {
      if (i != j) edges.emplace_back(i, k + j);
    }
  }
  return Dag(2 * static_cast<size_t>(k), std::move(edges), std::move(labels));
}

Dag gen_chain(uint32_t n) {
  std::vector<Edge> edges;
  for (uint32_t v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Dag(n, std::move(edges));
}

Dag gen_antichain(uint32_t n) { return Dag(n, {}); }

Dag gen_random_dag(uint32_t n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  // Map the top 53 bits to [0, 1); uniform_real_distribution is not
  // specified tightly enough to be reproducible across standard libraries.
  auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  std::vector<Edge> edges;
  for (uint32_t i = 0; i < n; ++i) {
    for (uint32_t j = i + 1; j < n; ++j) {
      if (uniform() < p) edges.emplace_back(i, j);
    }
  }
  return Dag(n, std::move(edges));
}

}  // namespace wdd
