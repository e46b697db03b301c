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

#include "wdd/report.hpp"

#include <json.hpp>

namespace wdd {

std::string report_to_json(const SolveReport& report, const Dag& g,
                           bool include_timings) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["inc"] = report.inc;
  doc["led"] = report.led ? json(*report.led) : json(nullptr);
  doc["min_fip"] = report.min_fip ? json(*report.min_fip) : json(nullptr);
  doc["dim"] = report.dim ? json(*report.dim) : json(nullptr);
  if (report.bounds) {
    doc["lemma1_bound"] = report.bounds->lemma1_bound;
    doc["lemma2_bound"] = report.bounds->lemma2_bound;
    doc["bounds_satisfied"] = {{"fact2", report.bounds->fact2_ok},
                               {"lemma1", report.bounds->lemma1_ok},
                               {"lemma2", report.bounds->lemma2_ok}};
  } else {
    doc["lemma1_bound"] = nullptr;
    doc["lemma2_bound"] = nullptr;
    doc["bounds_satisfied"] = nullptr;
  }
  doc["method"] = report.method;
  if (report.diametral_pair) {
    auto labels = [&g](const TopoOrder& t) {
      json seq = json::array();
      for (Vertex v : t.sequence()) seq.push_back(g.label(v));
      return seq;
    };
    doc["diametral_pair"] = {labels(report.diametral_pair->first),
                             labels(report.diametral_pair->second)};
  } else {
    doc["diametral_pair"] = nullptr;
  }
  if (include_timings) {
    json timings;
    for (const auto& [phase, ms] : report.timings_ms) timings[phase] = ms;
    doc["timings_ms"] = timings;
  }
  return doc.dump(2) + "\n";
}

}  // namespace wdd
