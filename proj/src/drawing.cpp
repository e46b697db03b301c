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

#include <sstream>

#include "wdd/errors.hpp"
#include "wdd/kernels.hpp"

namespace wdd {

Drawing make_drawing(const Dag& g, TopoOrder tx, TopoOrder ty) {
  const Reachability r = transitive_closure(g);
  return make_drawing(g, r, std::move(tx), std::move(ty));
}

Drawing make_drawing(const Dag& g, const Reachability& r, TopoOrder tx,
                     TopoOrder ty) {
  require_respects(g, tx);
  require_respects(g, ty);
  Drawing d{g, std::move(tx), std::move(ty), {}};
  for (const auto& [u, v] : r.inc_pairs) {
    // Ranks are distinct per axis, so {u, v} is a fip iff both axes order
    // the pair the same way.
    if ((d.tx.rank(u) < d.tx.rank(v)) == (d.ty.rank(u) < d.ty.rank(v))) {
      d.fips.emplace_back(u, v);
    }
  }
  return d;
}

uint64_t count_fips(const Drawing& d) { return d.fips.size(); }

uint64_t count_fips(const Reachability& r, const std::vector<uint32_t>& rx,
                    const std::vector<uint32_t>& ry) {
  const size_t n = r.vertex_count();
  uint64_t count = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (r.comparable(u, v)) continue;
      count += (rx[u] < rx[v]) == (ry[u] < ry[v]);
    }
  }
  return count;
}

uint64_t intersection_cardinality(const Dag& g, const TopoOrder& tx,
                                  const TopoOrder& ty) {
  require_respects(g, tx);
  require_respects(g, ty);
  const uint64_t n = g.vertex_count();
  const uint64_t all_pairs = n * (n - 1) / 2;
  // Exactly one orientation of every concordant pair lands in I.
  return all_pairs - kernels::count_discordant(tx.ranks().data(),
                                               ty.ranks().data(), n);
}

Drawing diagonal_drawing(const Dag& g) {
  TopoOrder t = topological_sort(g);
  return make_drawing(g, t, t);
}

bool is_dominance_drawing(const Drawing& d) { return d.fips.empty(); }

namespace {

std::string emit_coords(const Drawing& d) {
  std::string out;
  for (Vertex v = 0; v < d.dag.vertex_count(); ++v) {
    out += d.dag.label(v);
    out += ' ';
    out += std::to_string(d.x(v));
    out += ' ';
    out += std::to_string(d.y(v));
    out += '\n';
  }
  return out;
}

// Fixed styling: 48px grid cells, Y axis pointing up, edges as thin solid
// segments, fips bold and dashed, vertices as labeled circles.
std::string emit_svg(const Drawing& d) {
  constexpr int kCell = 48;
  constexpr int kMargin = 48;
  constexpr int kRadius = 14;
  const int n = static_cast<int>(d.dag.vertex_count());
  const int span = n > 0 ? (n - 1) * kCell : 0;
  const int width = 2 * kMargin + span;
  const int height = 2 * kMargin + span;

  auto px = [&](Vertex v) {
    return kMargin + (static_cast<int>(d.x(v)) - 1) * kCell;
  };
  auto py = [&](Vertex v) {
    return kMargin + (n - static_cast<int>(d.y(v))) * kCell;
  };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << width << "\" height=\"" << height << "\" viewBox=\"0 0 " << width
      << ' ' << height << "\">\n";
  for (const auto& [u, v] : d.dag.edges()) {
    svg << "  <line class=\"edge\" x1=\"" << px(u) << "\" y1=\"" << py(u)
        << "\" x2=\"" << px(v) << "\" y2=\"" << py(v)
        << "\" stroke=\"#222222\" stroke-width=\"1\"/>\n";
  }
  for (const auto& [u, v] : d.fips) {
    svg << "  <line class=\"fip\" x1=\"" << px(u) << "\" y1=\"" << py(u)
        << "\" x2=\"" << px(v) << "\" y2=\"" << py(v)
        << "\" stroke=\"#d62728\" stroke-width=\"3\" "
           "stroke-dasharray=\"6 3\"/>\n";
  }
  for (Vertex v = 0; v < d.dag.vertex_count(); ++v) {
    svg << "  <circle cx=\"" << px(v) << "\" cy=\"" << py(v) << "\" r=\""
        << kRadius << "\" fill=\"#ffffff\" stroke=\"#000000\"/>\n"
        << "  <text x=\"" << px(v) << "\" y=\"" << py(v) + 4
        << "\" font-family=\"monospace\" font-size=\"12\" "
           "text-anchor=\"middle\">"
        << d.dag.label(v) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace

std::string emit_drawing(const Drawing& d, std::string_view format) {
  if (format == "coords") return emit_coords(d);
  if (format == "svg") return emit_svg(d);
  throw UnknownFormat("unknown drawing format: " + std::string(format));
}

}  // namespace wdd
