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

#include <cstddef>
#include <cstdint>

// Backend entry points, internal to the kernels component.
namespace wdd::kernels::detail {

struct KernelTable {
  uint64_t (*count_discordant)(const uint32_t*, const uint32_t*, size_t);
  void (*or_words)(uint64_t*, const uint64_t*, size_t);
  uint64_t (*popcount_words)(const uint64_t*, size_t);
};

uint64_t count_discordant_scalar(const uint32_t* ra, const uint32_t* rb,
                                 size_t n);
void or_words_scalar(uint64_t* dst, const uint64_t* src, size_t nwords);
uint64_t popcount_words_scalar(const uint64_t* words, size_t nwords);

#if defined(WDD_HAVE_AVX2)
uint64_t count_discordant_avx2(const uint32_t* ra, const uint32_t* rb,
                               size_t n);
void or_words_avx2(uint64_t* dst, const uint64_t* src, size_t nwords);
uint64_t popcount_words_avx2(const uint64_t* words, size_t nwords);
#endif

}  // namespace wdd::kernels::detail
