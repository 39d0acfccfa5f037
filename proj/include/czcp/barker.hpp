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

#include <vector>

#include "czcp/sequence.hpp"
#include "czcp/verify.hpp"

namespace czcp {

struct BarkerEntry {
  int n = 0;
  std::vector<Sequence> sequences;
  // rho_a(tau) for tau = 0..n-1, one vector per sequence.
  std::vector<std::vector<int>> autocorrelations;
};

// All binary Barker lengths: 2, 3, 4, 5, 7, 11, 13.
const std::vector<BarkerEntry>& barker_table();

// Barker sequence(s) of length n; lengths 2 and 4 have two.
std::vector<Sequence> barker(int n);

// (a || b, a || -b) for binary a, b with |a| = M <= |b| = N. Requires
// rho_a(tau) = -rho_b(tau) for 0 < tau < M and, when M < N, rho_b(M) = 0.
// Result is an (M + N, M) pair. A failed condition throws
// PreconditionError carrying the offending tau.
SequencePair theorem4_pair(const Sequence& a, const Sequence& b);

// Verification report of a binary GCP read as a cross Z-complementary pair;
// its zone width is at least 1. Throws UsageError if p is not a binary GCP.
CzcpReport gcp_as_czcp(const SequencePair& p);

// Turyn(gcp, czcp): an (N*M, Z*M) pair from a binary GCP of length M and a
// binary (N, Z) pair. Both inputs and the output are verified; any shortfall
// throws (UsageError for inputs, std::logic_error for the output).
SequencePair theorem6_extend(const SequencePair& gcp, const SequencePair& czcp);

}  // namespace czcp
