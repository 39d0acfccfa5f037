// Copyright 2026 The czcp Authors.
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "czcp/error.hpp"
#include "czcp/kernels/difference_histogram.hpp"

namespace czcp::kernels {
namespace {

std::vector<Exponent> random_exponents(std::mt19937_64& rng, int q, std::size_t n) {
  std::uniform_int_distribution<int> d(0, q - 1);
  std::vector<Exponent> v(n);
  for (auto& e : v) e = static_cast<Exponent>(d(rng));
  return v;
}

TEST(DifferenceHistogram, ScalarCountsDifferences) {
  const std::vector<Exponent> x = {0, 1, 5, 3};
  const std::vector<Exponent> y = {0, 3, 1, 3};
  std::vector<std::int64_t> counts(6, 0);
  difference_histogram_scalar(x, y, 6, counts);
  // differences: 0, -2 = 4, 4, 0
  EXPECT_EQ(counts, (std::vector<std::int64_t>{2, 0, 0, 0, 2, 0}));
  // Accumulates rather than overwriting.
  difference_histogram_scalar(x, y, 6, counts);
  EXPECT_EQ(counts[0], 4);
}

TEST(DifferenceHistogram, DispatchReportsAnIsa) {
  EXPECT_TRUE(isa_supported(Isa::kScalar));
  EXPECT_TRUE(isa_supported(active_isa()));
  EXPECT_FALSE(isa_name(active_isa()).empty());
}

// Every SIMD variant must match the scalar reference bit for bit.
TEST(DifferenceHistogram, Avx2MatchesScalar) {
  if (!isa_supported(Isa::kAvx2)) GTEST_SKIP() << "CPU lacks AVX2";
  std::mt19937_64 rng(7);
  const int moduli[] = {2, 3, 4, 5, 6, 7, 8, 12, 16, 31, 32, 33, 64, 255};
  for (int q : moduli) {
    for (std::size_t n : {0u, 1u, 15u, 31u, 32u, 33u, 63u, 64u, 65u, 100u, 257u, 1000u}) {
      for (std::size_t offset : {0u, 1u, 3u}) {
        const auto xs = random_exponents(rng, q, n + offset);
        const auto ys = random_exponents(rng, q, n + 2 * offset);
        const std::span<const Exponent> x(xs.data() + offset, n);
        const std::span<const Exponent> y(ys.data() + 2 * offset, n);
        std::vector<std::int64_t> ref(q, 5), simd(q, 5), auto_(q, 5);
        difference_histogram_scalar(x, y, q, ref);
        difference_histogram(Isa::kAvx2, x, y, q, simd);
        difference_histogram(x, y, q, auto_);
        ASSERT_EQ(ref, simd) << "q=" << q << " n=" << n << " offset=" << offset;
        ASSERT_EQ(ref, auto_) << "q=" << q << " n=" << n;
      }
    }
  }
}

TEST(DifferenceHistogram, Avx2EdgeValues) {
  if (!isa_supported(Isa::kAvx2)) GTEST_SKIP() << "CPU lacks AVX2";
  for (int q : {2, 32}) {
    std::vector<Exponent> x(97, static_cast<Exponent>(q - 1));
    std::vector<Exponent> y(97, 0);
    std::vector<std::int64_t> ref(q, 0), simd(q, 0);
    difference_histogram_scalar(x, y, q, ref);
    difference_histogram(Isa::kAvx2, x, y, q, simd);
    EXPECT_EQ(ref, simd);
    difference_histogram_scalar(y, x, q, ref);
    difference_histogram(Isa::kAvx2, y, x, q, simd);
    EXPECT_EQ(ref, simd);
  }
}

TEST(DifferenceHistogram, RejectsShapeErrors) {
  const std::vector<Exponent> x = {0, 1};
  const std::vector<Exponent> y = {0};
  std::vector<std::int64_t> counts(2, 0);
  EXPECT_THROW(difference_histogram(x, y, 2, counts), UsageError);
  std::vector<std::int64_t> short_counts(1, 0);
  EXPECT_THROW(difference_histogram(x, x, 2, short_counts), UsageError);
}

}  // namespace
}  // namespace czcp::kernels
