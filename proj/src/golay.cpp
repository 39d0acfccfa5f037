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

#include "czcp/golay.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "czcp/correlation.hpp"
#include "czcp/error.hpp"

namespace czcp {

SequencePair kernel(int n) {
  switch (n) {
    case 2:
      return {Sequence::from_signs("++"), Sequence::from_signs("+-")};
    case 10:
      return {Sequence::from_signs("++-+-+--++"),
              Sequence::from_signs("++-+++++--")};
    case 26:
      return {Sequence::from_signs("++++-++--+-+-+--+-+++--+++"),
              Sequence::from_signs("++++-++--+-+++++-+---++---")};
    default:
      throw UsageError("no Golay kernel of length " + std::to_string(n) +
                       " (expected 2, 10 or 26)");
  }
}

SequencePair turyn(const SequencePair& first, const SequencePair& second) {
  if (!first.is_binary() || !second.is_binary()) {
    throw UsageError("Turyn's product is defined for binary pairs only");
  }
  const auto a = first.first().bipolar();
  const auto b = first.second().bipolar();
  const auto c = second.first().bipolar();
  const auto d = second.second().bipolar();
  const std::size_t inner = a.size();
  const std::size_t outer = c.size();

  std::vector<int> e(inner * outer);
  std::vector<int> f(inner * outer);
  for (std::size_t k = 0; k < outer; ++k) {
    const int c_rev = c[outer - 1 - k];
    const int d_rev = d[outer - 1 - k];
    for (std::size_t j = 0; j < inner; ++j) {
      // Exactly one of half_sum, half_diff is nonzero for +-1 entries.
      const int half_sum = (a[j] + b[j]) / 2;
      const int half_diff = (b[j] - a[j]) / 2;
      e[k * inner + j] = c[k] * half_sum - d_rev * half_diff;
      f[k * inner + j] = d[k] * half_sum + c_rev * half_diff;
    }
  }
  return {Sequence::from_bipolar(e), Sequence::from_bipolar(f)};
}

SequencePair mate(const SequencePair& p) {
  if (p.q() % 2 != 0) {
    throw UsageError("complementary mate needs an even modulus");
  }
  return {conjugate(reverse(p.second())),
          negate(conjugate(reverse(p.first())))};
}

bool is_gcp(const SequencePair& p) {
  for (long tau = 1; tau < static_cast<long>(p.size()); ++tau) {
    if (!is_zero(auto_corr(p.first(), tau) + auto_corr(p.second(), tau))) {
      return false;
    }
  }
  return true;
}

GcpRecipe::GcpRecipe(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw UsageError("GCP recipe is empty");
  for (int f : factors_) {
    if (f != 2 && f != 10 && f != 26) {
      throw UsageError("GCP recipe factor " + std::to_string(f) +
                       " is not a kernel length (2, 10, 26)");
    }
  }
  for (int seed : {2, 26, 10}) {
    const auto it = std::find(factors_.begin(), factors_.end(), seed);
    if (it != factors_.end()) {
      std::rotate(factors_.begin(), it, it + 1);
      break;
    }
  }
}

GcpRecipe GcpRecipe::from_exponents(int alpha, int beta, int gamma) {
  if (alpha < 0 || beta < 0 || gamma < 0) {
    throw UsageError("GCP exponents must be non-negative");
  }
  std::vector<int> f;
  f.insert(f.end(), alpha, 2);
  f.insert(f.end(), beta, 10);
  f.insert(f.end(), gamma, 26);
  return GcpRecipe(std::move(f));
}

GcpRecipe GcpRecipe::parse(std::string_view text) {
  std::vector<int> factors;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view field = text.substr(0, comma);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int v = 0;
    const auto* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, v);
    if (field.empty() || ec != std::errc() || ptr != end) {
      throw UsageError("malformed GCP recipe entry '" + std::string(field) + "'");
    }
    factors.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return GcpRecipe(std::move(factors));
}

std::size_t GcpRecipe::length() const noexcept {
  std::size_t n = 1;
  for (int f : factors_) n *= static_cast<std::size_t>(f);
  return n;
}

int GcpRecipe::count(int factor) const noexcept {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), factor));
}

SequencePair build_gcp(const GcpRecipe& recipe) {
  const auto& f = recipe.factors();
  SequencePair acc = kernel(f.front());
  for (std::size_t i = 1; i < f.size(); ++i) acc = turyn(kernel(f[i]), acc);
  return acc;
}

std::vector<ColumnSign> column_sign_profile(const SequencePair& p) {
  if (!p.is_binary()) throw UsageError("column signs need a binary pair");
  std::vector<ColumnSign> out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i] = p.first()[i] == p.second()[i] ? ColumnSign::kSame
                                           : ColumnSign::kDifferent;
  }
  return out;
}

std::size_t leading_same_columns(const SequencePair& p) {
  const auto cols = column_sign_profile(p);
  return static_cast<std::size_t>(
      std::find(cols.begin(), cols.end(), ColumnSign::kDifferent) - cols.begin());
}

}  // namespace czcp
