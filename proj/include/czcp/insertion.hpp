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

#include "czcp/golay.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

// Four inserted symbols omega^x0, omega^x1, omega^y0, omega^y1 over Z_q.
struct InsertionSpec {
  int q = 2;
  int x0 = 0;
  int x1 = 0;
  int y0 = 1;
  int y1 = 0;

  // (+, +, -, +): the binary choice that reproduces the worked length-18
  // example.
  static InsertionSpec binary_default() { return {}; }
};

// Exact check of x0 - conj(y1) = 0, x1 + conj(y0) = 0, x0 = x1 and
// conj(y0) = -conj(y1) over the q-th roots of unity. `q` overrides spec.q.
bool validate_spec(const InsertionSpec& spec, int q);
inline bool validate_spec(const InsertionSpec& spec) {
  return validate_spec(spec, spec.q);
}

// Length N + 2 sequence holding a (N even) with x0 placed after the first r
// entries of a and x1 after the first N - r entries; x0 precedes x1 when the
// two slots coincide (r = N/2). r = 0 gives (x0, a, x1), r = N gives
// (x1, a, x0). x0 and x1 are exponents over a.q().
Sequence insert_symmetric(const Sequence& a, std::size_t r, int x0, int x1);

// Re-expresses a binary sequence over Z_q (q even): exponent 1 becomes q/2.
Sequence lift_binary(const Sequence& a, int q);

// Intermediate sequences of the insertion construction, kept for tests.
struct InsertionTrace {
  SequencePair gcp;   // (a, b)
  SequencePair mate;  // (c, d)
  Sequence e;         // a || c
  Sequence f;         // b || d
  SequencePair result;  // (g, h)
};

// g = (x0, a||c, y0), h = (x1, b||d, y1) for (c, d) = mate(gcp).
InsertionTrace insertion_construct(const SequencePair& gcp,
                                   const InsertionSpec& spec);

inline constexpr std::size_t kDefaultMaxLength = 2048;

// Insertion pair over the Turyn GCP of length N = 2^alpha 10^beta 26^gamma
// (alpha >= 1). Output length 2N + 2, zone N/2 + 1. Throws UsageError on
// alpha = 0, a spec failing validate_spec, or 2N + 2 > max_length.
SequencePair theorem2_pair(int alpha, int beta, int gamma,
                           const InsertionSpec& spec,
                           std::size_t max_length = kDefaultMaxLength);
InsertionTrace theorem2_trace(int alpha, int beta, int gamma,
                              const InsertionSpec& spec,
                              std::size_t max_length = kDefaultMaxLength);
std::size_t theorem2_zone(int alpha, int beta, int gamma);

enum class InsertionFamily { kTen, kTwentySix, kTenTwentySix };

// "10b", "26g" or "10b26g".
InsertionFamily parse_family(std::string_view text);
std::string_view family_name(InsertionFamily family);

// Same pipeline over GCPs of length 10^beta, 26^gamma or 10^beta 26^gamma.
// Zone 4N/10 + 1 for 10^beta, 12N/26 + 1 for the other two families.
SequencePair theorem3_pair(InsertionFamily family, int beta, int gamma,
                           const InsertionSpec& spec,
                           std::size_t max_length = kDefaultMaxLength);
std::size_t theorem3_length(InsertionFamily family, int beta, int gamma);
std::size_t theorem3_zone(InsertionFamily family, int beta, int gamma);

}  // namespace czcp
