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

#include "czcp/kernels/difference_histogram.hpp"

namespace czcp::kernels {

void difference_histogram_scalar(std::span<const Exponent> x,
                                 std::span<const Exponent> y, int q,
                                 std::span<std::int64_t> counts) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    int d = static_cast<int>(x[i]) - static_cast<int>(y[i]);
    if (d < 0) d += q;
    ++counts[d];
  }
}

}  // namespace czcp::kernels
