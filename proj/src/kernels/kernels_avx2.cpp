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

#include "backends.hpp"

#if defined(WDD_HAVE_AVX2)

#include <immintrin.h>

#include <bit>

namespace wdd::kernels::detail {

// Counts ordered disagreeing pairs over the full n x n grid, eight j at a
// time, and halves the total. The diagonal contributes nothing and each
// unordered pair is seen exactly twice; this needs distinct values per array,
// which rank arrays guarantee.
uint64_t count_discordant_avx2(const uint32_t* ra, const uint32_t* rb,
                               size_t n) {
  uint64_t total = 0;
  for (size_t i = 0; i < n; ++i) {
    const __m256i ai = _mm256_set1_epi32(static_cast<int>(ra[i]));
    const __m256i bi = _mm256_set1_epi32(static_cast<int>(rb[i]));
    size_t j = 0;
    for (; j + 8 <= n; j += 8) {
      const __m256i aj =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ra + j));
      const __m256i bj =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(rb + j));
      // Ranks fit in int32, so signed compares are exact.
      const __m256i ga = _mm256_cmpgt_epi32(aj, ai);
      const __m256i gb = _mm256_cmpgt_epi32(bj, bi);
      const __m256i ne = _mm256_xor_si256(ga, gb);
      const unsigned mask = static_cast<unsigned>(
          _mm256_movemask_ps(_mm256_castsi256_ps(ne)));
      total += static_cast<uint64_t>(std::popcount(mask));
    }
    for (; j < n; ++j) {
      total += (ra[i] < ra[j]) != (rb[i] < rb[j]);
    }
  }
  return total / 2;
}

void or_words_avx2(uint64_t* dst, const uint64_t* src, size_t nwords) {
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    const __m256i s =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(d, s));
  }
  for (; i < nwords; ++i) {
    dst[i] |= src[i];
  }
}

// Nibble-LUT popcount, accumulated with psadbw.
uint64_t popcount_words_avx2(const uint64_t* words, size_t nwords) {
  const __m256i lut =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1,
                       1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= nwords; i += 4) {
    const __m256i v =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(words + i));
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo),
                                           _mm256_shuffle_epi8(lut, hi));
    acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
  }
  uint64_t total = static_cast<uint64_t>(_mm256_extract_epi64(acc, 0)) +
                   static_cast<uint64_t>(_mm256_extract_epi64(acc, 1)) +
                   static_cast<uint64_t>(_mm256_extract_epi64(acc, 2)) +
                   static_cast<uint64_t>(_mm256_extract_epi64(acc, 3));
  for (; i < nwords; ++i) {
    total += static_cast<uint64_t>(std::popcount(words[i]));
  }
  return total;
}

}  // namespace wdd::kernels::detail

#endif  // WDD_HAVE_AVX2
