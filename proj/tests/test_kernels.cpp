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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <doctest.h>

using namespace wdd;

namespace {

// Restores the startup backend when a test forces another one.
struct BackendGuard {
  kernels::Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::set_backend(saved); }
};

std::vector<uint32_t> random_ranks(size_t n, std::mt19937_64& rng) {
  std::vector<uint32_t> ranks(n);
  std::iota(ranks.begin(), ranks.end(), 1);
  std::shuffle(ranks.begin(), ranks.end(), rng);
  return ranks;
}

}  // namespace

TEST_CASE("count_discordant small fixed cases") {
  const std::vector<uint32_t> up{1, 2, 3};
  const std::vector<uint32_t> down{3, 2, 1};
  CHECK(kernels::count_discordant(up.data(), up.data(), 3) == 0);
  CHECK(kernels::count_discordant(up.data(), down.data(), 3) == 3);
  CHECK(kernels::count_discordant(up.data(), up.data(), 0) == 0);
  CHECK(kernels::count_discordant(up.data(), down.data(), 1) == 0);
}

TEST_CASE("scalar backend is always available") {
  CHECK(kernels::backend_supported(kernels::Backend::kScalar));
  CHECK(kernels::backend_name(kernels::Backend::kScalar) ==
        std::string("scalar"));
  CHECK(kernels::backend_name(kernels::Backend::kAvx2) == std::string("avx2"));
}

TEST_CASE("all supported backends agree on count_discordant") {
  std::mt19937_64 rng(2026);
  BackendGuard guard;
  for (const size_t n : {0u, 1u, 2u, 3u, 7u, 8u, 9u, 15u, 16u, 31u, 64u,
                         100u, 257u}) {
    for (int rep = 0; rep < 8; ++rep) {
      const auto ra = random_ranks(n, rng);
      const auto rb = random_ranks(n, rng);
      kernels::set_backend(kernels::Backend::kScalar);
      const uint64_t expected = kernels::count_discordant(ra.data(), rb.data(), n);
      for (const auto b : {kernels::Backend::kScalar, kernels::Backend::kAvx2}) {
        if (!kernels::backend_supported(b)) continue;
        kernels::set_backend(b);
        CAPTURE(n);
        CAPTURE(kernels::backend_name(b));
        CHECK(kernels::count_discordant(ra.data(), rb.data(), n) == expected);
      }
    }
  }
}

TEST_CASE("all supported backends agree on or_words and popcount_words") {
  std::mt19937_64 rng(7);
  BackendGuard guard;
  for (const size_t nwords : {0u, 1u, 2u, 3u, 4u, 5u, 8u, 13u, 64u}) {
    std::vector<uint64_t> dst(nwords), src(nwords);
    for (auto& w : dst) w = rng();
    for (auto& w : src) w = rng();

    kernels::set_backend(kernels::Backend::kScalar);
    std::vector<uint64_t> expected = dst;
    kernels::or_words(expected.data(), src.data(), nwords);
    const uint64_t expected_pop =
        kernels::popcount_words(expected.data(), nwords);

    for (const auto b : {kernels::Backend::kScalar, kernels::Backend::kAvx2}) {
      if (!kernels::backend_supported(b)) continue;
      kernels::set_backend(b);
      std::vector<uint64_t> got = dst;
      kernels::or_words(got.data(), src.data(), nwords);
      CHECK(got == expected);
      CHECK(kernels::popcount_words(got.data(), nwords) == expected_pop);
    }
  }
}

TEST_CASE("set_backend rejects unsupported backends") {
  if (!kernels::backend_supported(kernels::Backend::kAvx2)) {
    CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::kAvx2),
                    std::invalid_argument);
  } else {
    BackendGuard guard;
    kernels::set_backend(kernels::Backend::kAvx2);
    CHECK(kernels::active_backend() == kernels::Backend::kAvx2);
  }
}
