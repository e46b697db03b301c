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

#include "wdd/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

#include "backends.hpp"

namespace wdd::kernels {
namespace {

using detail::KernelTable;

constexpr KernelTable kScalarTable = {
    detail::count_discordant_scalar,
    detail::or_words_scalar,
    detail::popcount_words_scalar,
};

#if defined(WDD_HAVE_AVX2)
constexpr KernelTable kAvx2Table = {
    detail::count_discordant_avx2,
    detail::or_words_avx2,
    detail::popcount_words_avx2,
};
#endif

bool cpu_has_avx2() {
#if defined(WDD_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

struct Dispatch {
  Backend backend;
  const KernelTable* table;
};

Backend default_backend() {
  if (const char* env = std::getenv("WDD_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::kScalar;
    if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::kAvx2)) {
      return Backend::kAvx2;
    }
    // Unknown or unsupported request: fall through to detection.
  }
  return backend_supported(Backend::kAvx2) ? Backend::kAvx2 : Backend::kScalar;
}

Dispatch& dispatch() {
  static Dispatch d = [] {
    Dispatch init{Backend::kScalar, &kScalarTable};
    init.backend = default_backend();
#if defined(WDD_HAVE_AVX2)
    if (init.backend == Backend::kAvx2) init.table = &kAvx2Table;
#endif
    return init;
  }();
  return d;
}

}  // namespace

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
  }
  return "unknown";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
      return cpu_has_avx2();
  }
  return false;
}

Backend active_backend() { return dispatch().backend; }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument(std::string("kernel backend not supported: ") +
                                backend_name(b));
  }
  dispatch().backend = b;
  dispatch().table = &kScalarTable;
#if defined(WDD_HAVE_AVX2)
  if (b == Backend::kAvx2) dispatch().table = &kAvx2Table;
#endif
}

uint64_t count_discordant(const uint32_t* ra, const uint32_t* rb, size_t n) {
  return dispatch().table->count_discordant(ra, rb, n);
}

void or_words(uint64_t* dst, const uint64_t* src, size_t nwords) {
  dispatch().table->or_words(dst, src, nwords);
}

uint64_t popcount_words(const uint64_t* words, size_t nwords) {
  return dispatch().table->popcount_words(words, nwords);
}

}  // namespace wdd::kernels
