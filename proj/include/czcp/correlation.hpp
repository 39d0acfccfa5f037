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
#include <string>
#include <vector>

#include "czcp/cyclotomic.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

// Aperiodic cross-correlation rho_{a,b}(tau):
//   tau >= 0:  sum_{k=0}^{N-1-tau} omega^(a_k - b_{k+tau})
//   tau <  0:  sum_{k=0}^{N-1+tau} omega^(a_{k-tau} - b_k)
//   |tau| >= N: 0
// a and b must share length and modulus.
CyclotomicValue cross_corr(const Sequence& a, const Sequence& b, long tau);

CyclotomicValue auto_corr(const Sequence& a, long tau);

// Correlation sums of a pair for tau = 0..N-1:
//   aacs[tau] = rho_a(tau) + rho_b(tau)
//   accs[tau] = rho_{a,b}(tau) + rho_{b,a}(tau)
struct CorrelationProfile {
  std::size_t n = 0;
  int q = 2;
  std::vector<CyclotomicValue> aacs;
  std::vector<CyclotomicValue> accs;
};

CorrelationProfile profile(const SequencePair& pair);

// Profile CSV: tau,aacs_re,aacs_im,aacs_mag,accs_re,accs_im,accs_mag with
// 12 significant digits.
std::string profile_csv(const CorrelationProfile& p);

}  // namespace czcp
