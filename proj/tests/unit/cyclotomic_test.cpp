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

#include <cmath>
#include <numbers>
#include <random>

#include "czcp/cyclotomic.hpp"

namespace czcp {
namespace {

using Poly = std::vector<std::int64_t>;

TEST(CyclotomicPolynomial, SmallOrders) {
  EXPECT_EQ(cyclotomic_polynomial(1), (Poly{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (Poly{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (Poly{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (Poly{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(8), (Poly{1, 0, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(9), (Poly{1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (Poly{1, 0, -1, 0, 1}));
  // Phi_105 is the first with a coefficient of magnitude 2.
  const Poly p105 = cyclotomic_polynomial(105);
  EXPECT_EQ(p105.size(), 49u);
  EXPECT_EQ(p105[7], -2);
}

TEST(IsZero, Examples) {
  EXPECT_TRUE(is_zero(CyclotomicValue(2, {3, 3})));
  EXPECT_TRUE(is_zero(CyclotomicValue(6, {1, 0, 0, 1, 0, 0})));
  EXPECT_FALSE(is_zero(CyclotomicValue(6, {1, 0, 0, 0, 0, 0})));
  EXPECT_TRUE(is_zero(CyclotomicValue(5, {1, 1, 1, 1, 1})));
  EXPECT_TRUE(is_zero(CyclotomicValue(6, {0, 1, 0, 0, 0, 1}) -
                      CyclotomicValue::integer(6, 1)));
}

TEST(ComplexValue, Examples) {
  EXPECT_EQ(complex_value(CyclotomicValue(2, {1, 1})), std::complex<double>(0, 0));
  const auto i = complex_value(CyclotomicValue(4, {0, 1, 0, 0}));
  EXPECT_EQ(i.real(), 0.0);
  EXPECT_EQ(i.imag(), 1.0);
  const auto v = complex_value(CyclotomicValue(6, {1, 1, 0, 0, 0, 0}));
  EXPECT_NEAR(v.real(), 1.5, 1e-15);
  EXPECT_NEAR(v.imag(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(CyclotomicValue, RotateAndConjugate) {
  const CyclotomicValue v(6, {2, 1, 0, 0, 0, 0});
  const CyclotomicValue r = v.rotated(5);
  EXPECT_EQ(r.count(5), 2);
  EXPECT_EQ(r.count(0), 1);
  const CyclotomicValue c = v.conjugated();
  EXPECT_EQ(c.count(0), 2);
  EXPECT_EQ(c.count(5), 1);
  EXPECT_TRUE(equal(v + c, CyclotomicValue::integer(6, 5)));
  EXPECT_NEAR(magnitude(v), std::abs(complex_value(v)), 1e-15);
}

TEST(CyclotomicValue, MismatchedModuliThrow) {
  CyclotomicValue a(4);
  EXPECT_THROW(a += CyclotomicValue(6), std::invalid_argument);
  EXPECT_THROW(CyclotomicValue(1), std::invalid_argument);
}

// Exact test against a direct complex sum on 10^4 random values.
TEST(IsZero, AgreesWithComplexEvaluation) {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> qd(2, 12);
  std::uniform_int_distribution<int> cd(-5, 5);
  std::bernoulli_distribution make_zero(0.3);
  int zeros = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int q = qd(rng);
    std::vector<std::int64_t> counts(q);
    for (auto& c : counts) c = cd(rng);
    if (make_zero(rng)) {
      // Add a multiple of Phi_q times a random shift so zeros are common.
      const Poly phi = cyclotomic_polynomial(q);
      std::fill(counts.begin(), counts.end(), 0);
      const int k = cd(rng);
      const int shift = std::uniform_int_distribution<int>(0, q - 1)(rng);
      for (std::size_t i = 0; i < phi.size(); ++i) {
        counts[(i + shift) % q] += k * phi[i];
      }
    }
    std::complex<double> direct = 0;
    for (int k = 0; k < q; ++k) {
      direct += static_cast<double>(counts[k]) *
                std::polar(1.0, 2.0 * std::numbers::pi * k / q);
    }
    const bool exact = is_zero(CyclotomicValue(q, counts));
    ASSERT_EQ(exact, std::abs(direct) < 1e-9) << "q=" << q << " trial=" << trial;
    zeros += exact;
  }
  EXPECT_GT(zeros, 1000);
}

}  // namespace
}  // namespace czcp
