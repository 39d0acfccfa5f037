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

#include <cstdlib>
#include <string>

#include "czcp/error.hpp"
#include "czcp/kernels/difference_histogram.hpp"

namespace czcp::kernels {
namespace {

// Above this alphabet size the per-class compare loop costs more than the
// scalar increment, so the dispatcher stays scalar.
constexpr int kAvx2MaxModulus = 32;

Isa detect() {
  if (const char* env = std::getenv("CZCP_SIMD");
      env != nullptr && std::string(env) == "scalar") {
    return Isa::kScalar;
  }
  if (isa_supported(Isa::kAvx2)) return Isa::kAvx2;
  return Isa::kScalar;
}

void check_args(std::span<const Exponent> x, std::span<const Exponent> y,
                int q, std::span<std::int64_t> counts) {
  if (x.size() != y.size()) {
    throw UsageError("difference_histogram: spans differ in length");
  }
  if (q < 2 || q > kMaxModulus || counts.size() < static_cast<std::size_t>(q)) {
    throw UsageError("difference_histogram: bad modulus or count buffer");
  }
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

void difference_histogram(Isa isa, std::span<const Exponent> x,
                          std::span<const Exponent> y, int q,
                          std::span<std::int64_t> counts) {
  check_args(x, y, q, counts);
  if (!isa_supported(isa)) {
    throw UsageError("instruction set '" + std::string(isa_name(isa)) +
                     "' not supported on this CPU");
  }
  switch (isa) {
    case Isa::kScalar:
      difference_histogram_scalar(x, y, q, counts);
      return;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      difference_histogram_avx2(x, y, q, counts);
#endif
      return;
  }
}

void difference_histogram(std::span<const Exponent> x,
                          std::span<const Exponent> y, int q,
                          std::span<std::int64_t> counts) {
  check_args(x, y, q, counts);
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::kAvx2 && q <= kAvx2MaxModulus) {
    difference_histogram_avx2(x, y, q, counts);
    return;
  }
#endif
  difference_histogram_scalar(x, y, q, counts);
}

}  // namespace czcp::kernels
