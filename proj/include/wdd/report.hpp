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

#include "wdd/dag.hpp"
#include "wdd/solver.hpp"

namespace wdd {

// JSON document with the frozen field names: inc, led, min_fip, dim,
// lemma1_bound, lemma2_bound, bounds_satisfied, method, diametral_pair
// (two label sequences), timings_ms. Uncomputed fields serialize as null.
// Timings are off by default so that identical runs stay byte-identical.
std::string report_to_json(const SolveReport& report, const Dag& g,
                           bool include_timings = false);

}  // namespace wdd
