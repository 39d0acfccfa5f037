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

#include "czcp/error.hpp"
#include "czcp/sequence.hpp"

namespace czcp {
namespace {

TEST(Sequence, ParsesBinaryText) {
  const Sequence s = Sequence::parse("++-+");
  EXPECT_EQ(s.q(), 2);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_EQ(s.bipolar(), (std::vector<int>{1, 1, -1, 1}));
  EXPECT_EQ(s.to_string(), "++-+");
}

TEST(Sequence, ParsesModularText) {
  const Sequence s = Sequence::parse("q=6:5,2,0");
  EXPECT_EQ(s.q(), 6);
  EXPECT_EQ(s[0], 5);
  EXPECT_EQ(s[1], 2);
  EXPECT_EQ(s.to_string(), "q=6:5,2,0");
  EXPECT_EQ(Sequence::parse(s.to_string()), s);
}

TEST(Sequence, AcceptsUnicodeMinus) {
  EXPECT_EQ(Sequence::from_signs("+−+"), Sequence::from_signs("+-+"));
}

TEST(Sequence, RejectsBadInput) {
  EXPECT_THROW(Sequence::parse(""), UsageError);
  EXPECT_THROW(Sequence::parse("+x-"), UsageError);
  EXPECT_THROW(Sequence::parse("q=4:1,4"), UsageError);
  EXPECT_THROW(Sequence::parse("q=1:0"), UsageError);
  EXPECT_THROW(Sequence(3, {0, 3}), UsageError);
  EXPECT_THROW(Sequence(2, std::vector<Exponent>{}), UsageError);
}

TEST(Sequence, FromBipolar) {
  const std::vector<int> v = {1, -1, -1};
  EXPECT_EQ(Sequence::from_bipolar(v).to_string(), "+--");
  const std::vector<int> bad = {1, 0};
  EXPECT_THROW(Sequence::from_bipolar(bad), UsageError);
}

TEST(SequencePair, ParseSkipsCommentsAndChecksShape) {
  const SequencePair p = SequencePair::parse("# pair\n++-\n+-+\n");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.second().to_string(), "+-+");
  EXPECT_EQ(p.to_string(), "++-\n+-+\n");
  EXPECT_THROW(SequencePair::parse("++\n+\n"), UsageError);
  EXPECT_THROW(SequencePair::parse("++\n"), UsageError);
  EXPECT_THROW(SequencePair(Sequence(2, {0}), Sequence(4, {0})), UsageError);
}

TEST(Transforms, Reverse) {
  EXPECT_EQ(reverse(Sequence::from_signs("++-")).to_string(), "-++");
}

TEST(Transforms, NegateBinary) {
  EXPECT_EQ(negate(Sequence::from_signs("+-")).to_string(), "-+");
}

TEST(Transforms, NegateNeedsEvenModulus) {
  EXPECT_EQ(negate(Sequence(6, {0, 4})), Sequence(6, {3, 1}));
  EXPECT_THROW(negate(Sequence(3, {0, 1})), UsageError);
}

TEST(Transforms, ConjugateModQ) {
  EXPECT_EQ(conjugate(Sequence(6, {5, 2})), Sequence(6, {1, 4}));
  EXPECT_EQ(conjugate(Sequence(6, {0})), Sequence(6, {0}));
}

TEST(Transforms, Concat) {
  EXPECT_EQ(concat(Sequence::from_signs("+-"), Sequence::from_signs("--")).to_string(),
            "+---");
  EXPECT_THROW(concat(Sequence(2, {0}), Sequence(4, {0})), UsageError);
}

}  // namespace
}  // namespace czcp
