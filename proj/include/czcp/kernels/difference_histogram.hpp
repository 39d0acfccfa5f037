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

#include <cstdint>
#include <span>
#include <string_view>

#include "czcp/sequence.hpp"

// Inner loop of every correlation in the library: for two equal-length
// exponent spans x and y, add 1 to counts[(x[i] - y[i]) mod q] for each i.
//
// The scalar kernel is the reference. SIMD variants must produce identical
// counts for every input (tests/unit/kernels_test.cpp checks this), and the
// dispatcher picks the widest variant the running CPU supports.
namespace czcp::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

// Variant used by difference_histogram(). Chosen on first call from CPU
// features; CZCP_SIMD=scalar in the environment forces the reference path.
Isa active_isa();

void difference_histogram_scalar(std::span<const Exponent> x,
                                 std::span<const Exponent> y, int q,
                                 std::span<std::int64_t> counts);

#if defined(__x86_64__) || defined(_M_X64)
// Requires AVX2 and POPCNT; callers go through difference_histogram().
void difference_histogram_avx2(std::span<const Exponent> x,
                               std::span<const Exponent> y, int q,
                               std::span<std::int64_t> counts);
#endif

// Runs `isa` explicitly; throws UsageError if the CPU lacks it.
void difference_histogram(Isa isa, std::span<const Exponent> x,
                          std::span<const Exponent> y, int q,
                          std::span<std::int64_t> counts);

void difference_histogram(std::span<const Exponent> x,
                          std::span<const Exponent> y, int q,
                          std::span<std::int64_t> counts);

}  // namespace czcp::kernels
