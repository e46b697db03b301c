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

#include "wdd/drawing.hpp"

#include <random>
#include <string>

#include <doctest.h>

#include "oracles.hpp"
#include "wdd/errors.hpp"
#include "wdd/solver.hpp"

using namespace wdd;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0;
  for (size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size())) {
    ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("chain drawings have no fips") {
  const Dag g = parse_edge_list("a b\nb c");
  const TopoOrder t = topological_sort(g);
  const Drawing d = make_drawing(g, t, t);
  CHECK(count_fips(d) == 0);
  CHECK(is_dominance_drawing(d));
}

TEST_CASE("crown C3 with equal orders hits the inc bound") {
  const Dag g = gen_crown(3);
  const TopoOrder t = topological_sort(g);
  CHECK(count_fips(make_drawing(g, t, t)) == 9);
}

TEST_CASE("diagonal drawing realizes fip = inc") {
  CHECK(diagonal_drawing(gen_crown(3)).fip_count() == 9);
  CHECK(diagonal_drawing(gen_chain(4)).fip_count() == 0);
  CHECK(diagonal_drawing(gen_antichain(3)).fip_count() == 3);
}

TEST_CASE("a reversed-source crown drawing has exactly three fips") {
  // Both axes keep sources before sinks; the second reverses both groups.
  const Dag g = gen_crown(3);
  const Drawing d = make_drawing(g, TopoOrder::from_sequence({0, 1, 2, 3, 4, 5}),
                                 TopoOrder::from_sequence({2, 1, 0, 5, 4, 3}));
  CHECK(count_fips(d) == 3);
  CHECK_FALSE(is_dominance_drawing(d));
}

TEST_CASE("make_drawing rejects non-topological orders") {
  const Dag g(2, {{0, 1}});
  CHECK_THROWS_AS(make_drawing(g, TopoOrder::from_sequence({1, 0}),
                               TopoOrder::from_sequence({0, 1})),
                  InvalidOrder);
}

TEST_CASE("count_fips equals the brute-force count on random instances") {
  std::mt19937_64 rng(11);
  for (uint64_t seed = 0; seed < 60; ++seed) {
    const Dag g = gen_random_dag(6, 0.3, seed);
    const Reachability r = transitive_closure(g);
    const TopoOrder tx = random_extension(r, rng);
    const TopoOrder ty = random_extension(r, rng);
    const Drawing d = make_drawing(g, r, tx, ty);
    CHECK(count_fips(d) == oracle::fips_brute(g, tx, ty));
    CHECK(count_fips(d) == count_fips(r, tx.ranks(), ty.ranks()));
  }
}

TEST_CASE("weak dominance holds for every closure pair") {
  std::mt19937_64 rng(5);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Dag g = gen_random_dag(7, 0.4, seed);
    const Reachability r = transitive_closure(g);
    const Drawing d = make_drawing(g, r, random_extension(r, rng),
                                   random_extension(r, rng));
    for (Vertex u = 0; u < 7; ++u) {
      for (Vertex v = 0; v < 7; ++v) {
        if (r.reachable(u, v)) {
          REQUIRE(d.x(u) < d.x(v));
          REQUIRE(d.y(u) < d.y(v));
        }
      }
    }
  }
}

TEST_CASE("fip count plus distance equals inc; intersection identity") {
  std::mt19937_64 rng(17);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Dag g = gen_random_dag(6, 0.35, seed);
    const Reachability r = transitive_closure(g);
    const TopoOrder tx = random_extension(r, rng);
    const TopoOrder ty = random_extension(r, rng);
    const uint64_t fips = count_fips(make_drawing(g, r, tx, ty));
    const uint64_t dist = distance(tx, ty, r);
    CHECK(fips + dist == count_incomparable(r));
    CHECK(intersection_cardinality(g, tx, ty) == r.closure_edge_count + fips);
    // Swapping the axes changes nothing.
    CHECK(count_fips(make_drawing(g, r, ty, tx)) == fips);
  }
}

TEST_CASE("intersection_cardinality rejects invalid orders") {
  const Dag g(2, {{0, 1}});
  CHECK_THROWS_AS(intersection_cardinality(g, TopoOrder::from_sequence({1, 0}),
                                           TopoOrder::from_sequence({0, 1})),
                  InvalidOrder);
}

TEST_CASE("intersection of equal orders is every pair") {
  const Dag g = gen_crown(3);
  const TopoOrder t = topological_sort(g);
  CHECK(intersection_cardinality(g, t, t) == 15);
  const Dag chain = gen_chain(3);
  const TopoOrder c = topological_sort(chain);
  CHECK(intersection_cardinality(chain, c, c) == 3);
}

TEST_CASE("2x2 grid poset admits a dominance drawing") {
  // Vertices 0=(0,0), 1=(0,1), 2=(1,0), 3=(1,1), ordered componentwise.
  const Dag grid(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const Reachability r = transitive_closure(grid);
  const ExtensionSet e = enumerate_extensions(r, 1000);
  bool found = false;
  for (const TopoOrder& a : e.extensions) {
    for (const TopoOrder& b : e.extensions) {
      if (count_fips(r, a.ranks(), b.ranks()) == 0) found = true;
    }
  }
  CHECK(found);
  const Drawing d = make_drawing(grid, TopoOrder::from_sequence({0, 1, 2, 3}),
                                 TopoOrder::from_sequence({0, 2, 1, 3}));
  CHECK(is_dominance_drawing(d));
}

TEST_CASE("coords output is one line per vertex, sorted by id") {
  const Dag g = parse_edge_list("u v\n");
  const TopoOrder t = topological_sort(g);
  CHECK(emit_drawing(make_drawing(g, t, t), "coords") == "u 1 1\nv 2 2\n");
}

TEST_CASE("empty graph emits empty coords and a valid svg shell") {
  const Drawing d = diagonal_drawing(Dag());
  CHECK(emit_drawing(d, "coords").empty());
  const std::string svg = emit_drawing(d, "svg");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("svg marks each fip with its own styled segment") {
  const Drawing d = diagonal_drawing(gen_crown(3));
  const std::string svg = emit_drawing(d, "svg");
  CHECK(count_occurrences(svg, "class=\"fip\"") == 9);
  CHECK(count_occurrences(svg, "class=\"edge\"") == 6);
}

TEST_CASE("emit_drawing rejects unknown formats") {
  CHECK_THROWS_AS(emit_drawing(diagonal_drawing(Dag()), "pdf"), UnknownFormat);
}

TEST_CASE("emit is byte-deterministic") {
  const Drawing d = diagonal_drawing(gen_crown(3));
  CHECK(emit_drawing(d, "svg") == emit_drawing(d, "svg"));
  CHECK(emit_drawing(d, "coords") == emit_drawing(d, "coords"));
}
