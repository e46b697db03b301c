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

// Data-parallel inner loops of the search core. Every kernel has a scalar
// reference implementation and may have SIMD variants; the active variant is
// chosen at runtime (CPU detection, overridable with set_backend or the
// WDD_KERNELS environment variable). All variants are equivalence-tested
// against the scalar reference.
namespace wdd::kernels {

enum class Backend { kScalar, kAvx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();

// Selects a backend for subsequent kernel calls. Throws std::invalid_argument
// if the backend is not supported on this machine or was not compiled in.
void set_backend(Backend b);

// Number of unordered index pairs {i, j} whose relative order differs between
// the two arrays: (ra[i] < ra[j]) != (rb[i] < rb[j]). Values must be distinct
// within each array (both arrays hold permutation ranks).
uint64_t count_discordant(const uint32_t* ra, const uint32_t* rb, size_t n);

// dst[i] |= src[i] for i in [0, nwords).
void or_words(uint64_t* dst, const uint64_t* src, size_t nwords);

// Total number of set bits across nwords words.
uint64_t popcount_words(const uint64_t* words, size_t nwords);

}  // namespace wdd::kernels
