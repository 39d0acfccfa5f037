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

#include "czcp/correlation.hpp"
#include "czcp/error.hpp"
#include "czcp/golay.hpp"
#include "oracle.hpp"

namespace czcp {
namespace {

SequencePair pair(const char* a, const char* b) {
  return {Sequence::from_signs(a), Sequence::from_signs(b)};
}

// Mate identity: rho_{a,c}(tau) + rho_{b,d}(tau) = 0 for 0 <= tau < N.
bool mate_identity(const SequencePair& ab, const SequencePair& cd) {
  for (long t = 0; t < static_cast<long>(ab.size()); ++t) {
    if (!is_zero(cross_corr(ab.first(), cd.first(), t) +
                 cross_corr(ab.second(), cd.second(), t))) {
      return false;
    }
  }
  return true;
}

std::vector<GcpRecipe> recipes_up_to(std::size_t limit) {
  std::vector<GcpRecipe> out;
  for (int g = 0; g <= 2; ++g) {
    for (int b = 0; b <= 3; ++b) {
      for (int a = 0; a <= 10; ++a) {
        if (a + b + g == 0) continue;
        const GcpRecipe r = GcpRecipe::from_exponents(a, b, g);
        if (r.length() <= limit) out.push_back(r);
      }
    }
  }
  return out;
}

TEST(Kernel, ReferenceRows) {
  EXPECT_EQ(kernel(2), pair("++", "+-"));
  EXPECT_EQ(kernel(10), pair("++-+-+--++", "++-+++++--"));
  EXPECT_EQ(kernel(26).first().to_string().substr(0, 10), "++++-++--+");
  EXPECT_THROW(kernel(4), UsageError);
  for (int n : {2, 10, 26}) EXPECT_TRUE(oracle::is_gcp(kernel(n)));
}

TEST(Turyn, Examples) {
  EXPECT_EQ(turyn(kernel(2), kernel(2)), pair("+-++", "+---"));
  const SequencePair p = turyn(kernel(2), kernel(10));
  EXPECT_EQ(p.size(), 20u);
  EXPECT_TRUE(oracle::is_gcp(p));
  EXPECT_EQ(turyn(pair("+", "+"), pair("+", "+")), pair("+", "+"));
  EXPECT_THROW(turyn(SequencePair(Sequence(4, {0}), Sequence(4, {1})), kernel(2)),
               UsageError);
}

TEST(Turyn, AllKernelProductsAreGolay) {
  for (int x : {2, 10, 26}) {
    for (int y : {2, 10, 26}) {
      EXPECT_TRUE(oracle::is_gcp(turyn(kernel(x), kernel(y)))) << x << "x" << y;
    }
  }
}

TEST(Mate, Examples) {
  EXPECT_EQ(mate(kernel(2)), pair("-+", "--"));
  EXPECT_TRUE(mate_identity(kernel(2), mate(kernel(2))));
  EXPECT_TRUE(mate_identity(kernel(10), mate(kernel(10))));
  EXPECT_EQ(mate(pair("+", "+")), pair("+", "-"));
  EXPECT_THROW(mate(SequencePair(Sequence(3, {0}), Sequence(3, {1}))), UsageError);
}

TEST(IsGcp, Examples) {
  EXPECT_TRUE(is_gcp(kernel(10)));
  EXPECT_FALSE(is_gcp(pair("++", "++")));
  EXPECT_TRUE(is_gcp(pair("+", "-")));
}

TEST(GcpRecipe, ParseAndValidate) {
  EXPECT_EQ(GcpRecipe::parse("2,2,10").length(), 40u);
  EXPECT_EQ(GcpRecipe::parse("10,2").factors().front(), 2);
  EXPECT_EQ(GcpRecipe::parse("10,26").factors().front(), 26);
  EXPECT_EQ(GcpRecipe::from_exponents(1, 1, 1).count(26), 1);
  EXPECT_THROW(GcpRecipe::parse(""), UsageError);
  EXPECT_THROW(GcpRecipe::parse("2,3"), UsageError);
  EXPECT_THROW(GcpRecipe(std::vector<int>{}), UsageError);
}

TEST(BuildGcp, SingleKernel) { EXPECT_EQ(build_gcp(GcpRecipe({26})), kernel(26)); }

// The length-8 build has the half-same column layout of the reference length-8
// pair +++-++-+ / +++---+-; the exact rows differ (see README).
TEST(BuildGcp, LengthEightColumnLayout) {
  const SequencePair p = build_gcp(GcpRecipe({2, 2, 2}));
  EXPECT_TRUE(oracle::is_gcp(p));
  const auto cols = column_sign_profile(p);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_EQ(cols[i], i < 4 ? ColumnSign::kSame : ColumnSign::kDifferent) << i;
  }
}

TEST(ColumnSigns, Examples) {
  EXPECT_EQ(column_sign_profile(kernel(2)),
            (std::vector<ColumnSign>{ColumnSign::kSame, ColumnSign::kDifferent}));
  EXPECT_EQ(leading_same_columns(build_gcp(GcpRecipe({2, 10}))), 10u);
  EXPECT_GE(leading_same_columns(build_gcp(GcpRecipe({10, 26}))), 120u);
}

TEST(BuildGcp, NestedBuildsAreGolayWithMates) {
  for (const auto& r : recipes_up_to(520)) {
    const SequencePair p = build_gcp(r);
    ASSERT_EQ(p.size(), r.length());
    ASSERT_TRUE(is_gcp(p)) << p.size();
    const SequencePair m = mate(p);
    ASSERT_TRUE(is_gcp(m)) << p.size();
    ASSERT_TRUE(mate_identity(p, m)) << p.size();
  }
}

// With a 2 in the recipe the first N/2 columns agree and the rest differ;
// the mate keeps that layout.
TEST(BuildGcp, HalfSameColumnsWhenAlphaPositive) {
  for (const auto& r : recipes_up_to(1040)) {
    if (r.count(2) == 0) continue;
    for (const SequencePair& p : {build_gcp(r), mate(build_gcp(r))}) {
      const auto cols = column_sign_profile(p);
      const std::size_t n = p.size();
      for (std::size_t i = 0; i < n; ++i) {
        ASSERT_EQ(cols[i], i < n / 2 ? ColumnSign::kSame : ColumnSign::kDifferent)
            << "N=" << n << " column " << i;
      }
    }
  }
}

// Leading same-sign run scales with the extra factors: 4 * 10^(b-1) for
// 10^b, 12 * 26^(g-1) * 10^b once a 26 is present.
TEST(BuildGcp, LeadingRunScalesForTenAndTwentySix) {
  for (int b = 0; b <= 2; ++b) {
    for (int g = 0; g <= 2; ++g) {
      if (b + g == 0) continue;
      const SequencePair p = build_gcp(GcpRecipe::from_exponents(0, b, g));
      std::size_t expected = 0;
      if (g == 0) {
        expected = 4;
        for (int i = 1; i < b; ++i) expected *= 10;
      } else {
        expected = 12;
        for (int i = 1; i < g; ++i) expected *= 26;
        for (int i = 0; i < b; ++i) expected *= 10;
      }
      EXPECT_EQ(leading_same_columns(p), expected) << "beta=" << b << " gamma=" << g;
    }
  }
}

}  // namespace
}  // namespace czcp
