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

#include "czcp/correlation.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "czcp/error.hpp"
#include "czcp/kernels/difference_histogram.hpp"

namespace czcp {
namespace {

std::string fmt12(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

CyclotomicValue cross_corr(const Sequence& a, const Sequence& b, long tau) {
  if (a.size() != b.size()) {
    throw UsageError("cross_corr: sequences differ in length");
  }
  if (a.q() != b.q()) throw UsageError("cross_corr: sequences differ in modulus");

  const long n = static_cast<long>(a.size());
  std::vector<std::int64_t> counts(a.q(), 0);
  if (tau >= n || tau <= -n) return CyclotomicValue(a.q(), std::move(counts));

  const auto av = a.values();
  const auto bv = b.values();
  const auto overlap = static_cast<std::size_t>(n - std::labs(tau));
  if (tau >= 0) {
    kernels::difference_histogram(av.first(overlap), bv.subspan(tau, overlap),
                                  a.q(), counts);
  } else {
    kernels::difference_histogram(av.subspan(-tau, overlap), bv.first(overlap),
                                  a.q(), counts);
  }
  return CyclotomicValue(a.q(), std::move(counts));
}

CyclotomicValue auto_corr(const Sequence& a, long tau) {
  return cross_corr(a, a, tau);
}

CorrelationProfile profile(const SequencePair& pair) {
  const auto& a = pair.first();
  const auto& b = pair.second();
  CorrelationProfile p;
  p.n = pair.size();
  p.q = pair.q();
  p.aacs.reserve(p.n);
  p.accs.reserve(p.n);
  for (long tau = 0; tau < static_cast<long>(p.n); ++tau) {
    p.aacs.push_back(auto_corr(a, tau) + auto_corr(b, tau));
    p.accs.push_back(cross_corr(a, b, tau) + cross_corr(b, a, tau));
  }
  return p;
}

std::string profile_csv(const CorrelationProfile& p) {
  std::string out = "tau,aacs_re,aacs_im,aacs_mag,accs_re,accs_im,accs_mag\n";
  for (std::size_t tau = 0; tau < p.n; ++tau) {
    const auto s = complex_value(p.aacs[tau]);
    const auto c = complex_value(p.accs[tau]);
    out += std::to_string(tau) + "," + fmt12(s.real()) + "," + fmt12(s.imag()) +
           "," + fmt12(std::abs(s)) + "," + fmt12(c.real()) + "," +
           fmt12(c.imag()) + "," + fmt12(std::abs(c)) + "\n";
  }
  return out;
}

}  // namespace czcp
