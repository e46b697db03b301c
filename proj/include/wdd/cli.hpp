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

#include <ostream>
#include <string>
#include <vector>

#include "wdd/dag.hpp"
#include "wdd/solver.hpp"

namespace wdd::cli {

// Runs one toolkit invocation; args excludes the program name. All output is
// deterministic for a fixed argument vector and environment. Exit codes:
// 0 success, 1 usage error, 2 input error, 3 cap exceeded, 4 bound
// violation (verify only).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Dispatches "crown:k", "chain:n", "antichain:n", "random:n,p,seed" to the
// generators. Throws BadSpec.
Dag parse_generator_spec(const std::string& spec);

// 0 when every bound holds, 4 otherwise.
int exit_code_for(const BoundCheck& check);

}  // namespace wdd::cli
