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

#include "czcp/barker.hpp"

#include <stdexcept>
#include <string>

#include "czcp/correlation.hpp"
#include "czcp/error.hpp"
#include "czcp/golay.hpp"

namespace czcp {

const std::vector<BarkerEntry>& barker_table() {
  static const std::vector<BarkerEntry> table = [] {
    auto s = [](const char* signs) { return Sequence::from_signs(signs); };
    return std::vector<BarkerEntry>{
        {2, {s("+-"), s("++")}, {{2, -1}, {2, 1}}},
        {3, {s("++-")}, {{3, 0, -1}}},
        {4, {s("+-++"), s("+---")}, {{4, -1, 0, 1}, {4, 1, 0, -1}}},
        {5, {s("+++-+")}, {{5, 0, 1, 0, 1}}},
        {7, {s("+++--+-")}, {{7, 0, -1, 0, -1, 0, -1}}},
        {11, {s("+++---+--+-")}, {{11, 0, -1, 0, -1, 0, -1, 0, -1, 0, -1}}},
        {13,
         {s("+++++--++-+-+")},
         {{13, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}}},
    };
  }();
  return table;
}

std::vector<Sequence> barker(int n) {
  for (const auto& entry : barker_table()) {
    if (entry.n == n) return entry.sequences;
  }
  throw UsageError("no binary Barker sequence of length " + std::to_string(n));
}

SequencePair theorem4_pair(const Sequence& a, const Sequence& b) {
  if (!a.is_binary() || !b.is_binary()) {
    throw UsageError("Barker concatenation needs binary sequences");
  }
  const long m = static_cast<long>(a.size());
  const long n = static_cast<long>(b.size());
  if (m > n) throw UsageError("first sequence must not be longer than the second");

  for (long tau = 1; tau < m; ++tau) {
    if (!is_zero(auto_corr(a, tau) + auto_corr(b, tau))) {
      throw PreconditionError(
          "rho_a(tau) != -rho_b(tau) at tau=" + std::to_string(tau), tau);
    }
  }
  if (m < n && !is_zero(auto_corr(b, m))) {
    throw PreconditionError("rho_b(M) != 0 at tau=" + std::to_string(m), m);
  }
  return {concat(a, b), concat(a, negate(b))};
}

CzcpReport gcp_as_czcp(const SequencePair& p) {
  if (!p.is_binary()) throw UsageError("expected a binary pair");
  if (!is_gcp(p)) throw UsageError("pair is not a Golay complementary pair");
  return verify(p);
}

SequencePair theorem6_extend(const SequencePair& gcp, const SequencePair& czcp) {
  if (!gcp.is_binary() || !czcp.is_binary()) {
    throw UsageError("Turyn extension needs binary pairs");
  }
  if (!is_gcp(gcp)) throw UsageError("first argument is not a Golay pair");
  const CzcpReport seed = verify(czcp);
  if (!seed.is_czcp()) {
    throw UsageError("second argument is not a cross Z-complementary pair");
  }

  SequencePair out = turyn(gcp, czcp);
  const std::size_t want = seed.z * gcp.size();
  const CzcpReport got = verify(out);
  if (got.z < want) {
    throw std::logic_error("Turyn extension produced zone " +
                           std::to_string(got.z) + " < " + std::to_string(want));
  }
  return out;
}

}  // namespace czcp
