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

#include "czcp/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "czcp/error.hpp"
#include "czcp/sequence.hpp"

namespace czcp {
namespace {

void check_modulus(int q) {
  if (q < 2 || q > kMaxModulus) {
    throw UsageError("cyclotomic modulus q=" + std::to_string(q) +
                     " outside [2, " + std::to_string(kMaxModulus) + "]");
  }
}

void check_same_modulus(int a, int b) {
  if (a != b) {
    throw UsageError("cyclotomic values over different moduli (" +
                     std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

std::int64_t checked_sub_mul(std::int64_t acc, std::int64_t c, std::int64_t f) {
  std::int64_t prod = 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(c, f, &prod) ||
      __builtin_sub_overflow(acc, prod, &out)) {
    throw std::overflow_error("cyclotomic reduction overflowed int64");
  }
  return out;
}

// Exact division of `num` by the monic polynomial `den`. Both are
// constant-term-first; the quotient is returned and the remainder must vanish.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) {
      num[i - dn + j] = checked_sub_mul(num[i - dn + j], c, den[j]);
    }
  }
  return quot;
}

std::vector<std::int64_t> build_cyclotomic(int q) {
  std::vector<std::int64_t> poly(q + 1, 0);
  poly[0] = -1;
  poly[q] = 1;
  for (int d = 1; d < q; ++d) {
    if (q % d == 0) poly = divide_exact(std::move(poly), cyclotomic_polynomial(d));
  }
  return poly;
}

const std::vector<std::int64_t>& cached_cyclotomic(int q) {
  thread_local std::map<int, std::vector<std::int64_t>> cache;
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_cyclotomic(q)).first;
  return it->second;
}

// omega^k with exact values on the axes.
std::complex<double> unit_root(int k, int q) {
  k %= q;
  if ((4 * k) % q == 0) {
    switch ((4 * k) / q) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * k / q;
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

CyclotomicValue::CyclotomicValue(int q) : q_(q) {
  check_modulus(q);
  counts_.assign(q, 0);
}

CyclotomicValue::CyclotomicValue(int q, std::vector<std::int64_t> counts)
    : q_(q), counts_(std::move(counts)) {
  check_modulus(q);
  if (counts_.size() != static_cast<std::size_t>(q)) {
    throw UsageError("cyclotomic value needs exactly q counts");
  }
}

CyclotomicValue CyclotomicValue::integer(int q, std::int64_t n) {
  CyclotomicValue v(q);
  v.counts_[0] = n;
  return v;
}

void CyclotomicValue::add_power(int k, std::int64_t multiplicity) {
  k %= q_;
  if (k < 0) k += q_;
  counts_[k] += multiplicity;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
  check_same_modulus(q_, other.q_);
  for (int k = 0; k < q_; ++k) counts_[k] += other.counts_[k];
  return *this;
}

CyclotomicValue& CyclotomicValue::operator-=(const CyclotomicValue& other) {
  check_same_modulus(q_, other.q_);
  for (int k = 0; k < q_; ++k) counts_[k] -= other.counts_[k];
  return *this;
}

CyclotomicValue CyclotomicValue::operator-() const {
  CyclotomicValue out(q_);
  for (int k = 0; k < q_; ++k) out.counts_[k] = -counts_[k];
  return out;
}

CyclotomicValue CyclotomicValue::rotated(int j) const {
  j %= q_;
  if (j < 0) j += q_;
  CyclotomicValue out(q_);
  for (int k = 0; k < q_; ++k) out.counts_[(k + j) % q_] = counts_[k];
  return out;
}

CyclotomicValue CyclotomicValue::conjugated() const {
  CyclotomicValue out(q_);
  for (int k = 0; k < q_; ++k) out.counts_[(q_ - k) % q_] = counts_[k];
  return out;
}

std::vector<std::int64_t> cyclotomic_polynomial(int q) {
  if (q < 1) throw UsageError("cyclotomic polynomial index must be positive");
  if (q == 1) return {-1, 1};
  return cached_cyclotomic(q);
}

bool is_zero(const CyclotomicValue& v) {
  const int q = v.q();
  const auto& phi = cached_cyclotomic(q);
  const std::size_t deg = phi.size() - 1;
  std::vector<std::int64_t> r(v.counts().begin(), v.counts().end());
  for (std::size_t i = r.size(); i-- > deg;) {
    const std::int64_t c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) {
      r[i - deg + j] = checked_sub_mul(r[i - deg + j], c, phi[j]);
    }
  }
  for (std::size_t i = 0; i < deg; ++i) {
    if (r[i] != 0) return false;
  }
  return true;
}

bool equal(const CyclotomicValue& a, const CyclotomicValue& b) {
  return is_zero(a - b);
}

std::complex<double> complex_value(const CyclotomicValue& v) {
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < v.q(); ++k) {
    if (v.count(k) != 0) sum += static_cast<double>(v.count(k)) * unit_root(k, v.q());
  }
  const CyclotomicValue conj = v.conjugated();
  const double re = is_zero(v + conj) ? 0.0 : sum.real();
  const double im = is_zero(v - conj) ? 0.0 : sum.imag();
  return {re, im};
}

double magnitude(const CyclotomicValue& v) { return std::abs(complex_value(v)); }

}  // namespace czcp
