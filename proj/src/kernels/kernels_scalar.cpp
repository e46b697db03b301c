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

// Reference kernels. These define the semantics the SIMD variants must match.

#include <bit>

#include "backends.hpp"

namespace wdd::kernels::detail {

uint64_t count_discordant_scalar(const uint32_t* ra, const uint32_t* rb,
                                 size_t n) {
  uint64_t count = 0;
  for (size_t i = 0; i + 1 < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      count += (ra[i] < ra[j]) != (rb[i] < rb[j]);
    }
  }
  return count;
}

void or_words_scalar(uint64_t* dst, const uint64_t* src, size_t nwords) {
  for (size_t i = 0; i < nwords; ++i) {
    dst[i] |= src[i];
  }
}

uint64_t popcount_words_scalar(const uint64_t* words, size_t nwords) {
  uint64_t total = 0;
  for (size_t i = 0; i < nwords; ++i) {
    total += static_cast<uint64_t>(std::popcount(words[i]));
  }
  return total;
}

}  // namespace wdd::kernels::detail
