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

// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <array>

#include "czcp/kernels/difference_histogram.hpp"

namespace czcp::kernels {

void difference_histogram_avx2(std::span<const Exponent> x,
                               std::span<const Exponent> y, int q,
                               std::span<std::int64_t> counts) {
  constexpr std::size_t kLanes = 32;
  const std::size_t n = x.size();
  const __m256i modulus = _mm256_set1_epi8(static_cast<char>(q));

  std::array<std::int64_t, kMaxModulus + 1> local{};
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256i xv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    const __m256i yv =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    // Byte subtraction wraps mod 256; lanes with x < y need +q on top.
    const __m256i x_ge_y = _mm256_cmpeq_epi8(_mm256_max_epu8(xv, yv), xv);
    const __m256i diff = _mm256_add_epi8(_mm256_sub_epi8(xv, yv),
                                         _mm256_andnot_si256(x_ge_y, modulus));
    for (int k = 0; k < q; ++k) {
      const __m256i hit =
          _mm256_cmpeq_epi8(diff, _mm256_set1_epi8(static_cast<char>(k)));
      local[k] += _mm_popcnt_u32(
          static_cast<unsigned>(_mm256_movemask_epi8(hit)));
    }
  }
  for (int k = 0; k < q; ++k) counts[k] += local[k];

  if (i < n) {
    difference_histogram_scalar(x.subspan(i), y.subspan(i), q, counts);
  }
}

}  // namespace czcp::kernels
