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

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp {

// Binary Golay kernels of length 2, 10 and 26, in their standard form
// (no negation or reversal applied).
SequencePair kernel(int n);

// Turyn product of two binary pairs. With first = (a, b) of length M and
// second = (c, d) of length K, returns (e, f) of length M*K:
//   e = c (x) (a+b)/2 - rev(d) (x) (b-a)/2
//   f = d (x) (a+b)/2 + rev(c) (x) (b-a)/2
// where (x) is the Kronecker product, so second indexes the outer blocks.
SequencePair turyn(const SequencePair& first, const SequencePair& second);

// Complementary mate (rev(conj b), -rev(conj a)). Needs even q.
SequencePair mate(const SequencePair& p);

bool is_gcp(const SequencePair& p);

// Kernel lengths for an iterated Turyn build. The factor that seeds the
// build is moved to the front on construction: a 2 when any is present,
// otherwise a 26 when any is present, otherwise 10. The remaining factors
// keep their given order and are applied left to right as the first Turyn
// argument against the accumulated pair.
class GcpRecipe {
 public:
  explicit GcpRecipe(std::vector<int> factors);

  // 2^alpha * 10^beta * 26^gamma, factors listed as 2s, then 10s, then 26s.
  static GcpRecipe from_exponents(int alpha, int beta, int gamma);
  // Comma list such as "2,2,10".
  static GcpRecipe parse(std::string_view text);

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t length() const noexcept;
  int count(int factor) const noexcept;

 private:
  std::vector<int> factors_;
};

SequencePair build_gcp(const GcpRecipe& recipe);

enum class ColumnSign { kSame, kDifferent };

// Entry i is kSame iff first[i] == second[i]. Binary pairs only.
std::vector<ColumnSign> column_sign_profile(const SequencePair& p);

// Length of the leading run of kSame columns.
std::size_t leading_same_columns(const SequencePair& p);

}  // namespace czcp
