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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace czcp {

// An exact element of Z[omega], omega = exp(2*pi*i/q), held as the integer
// multiplicity of each power omega^k, k in [0, q). The representation is not
// unique (sum_k omega^k = 0), so compare values with is_zero(a - b), never
// by comparing counts.
class CyclotomicValue {
 public:
  explicit CyclotomicValue(int q);
  CyclotomicValue(int q, std::vector<std::int64_t> counts);

  // n * omega^0.
  static CyclotomicValue integer(int q, std::int64_t n);

  int q() const noexcept { return q_; }
  std::span<const std::int64_t> counts() const noexcept { return counts_; }
  std::int64_t count(int k) const { return counts_[k]; }

  void add_power(int k, std::int64_t multiplicity = 1);

  CyclotomicValue& operator+=(const CyclotomicValue& other);
  CyclotomicValue& operator-=(const CyclotomicValue& other);
  CyclotomicValue operator-() const;
  friend CyclotomicValue operator+(CyclotomicValue a, const CyclotomicValue& b) {
    return a += b;
  }
  friend CyclotomicValue operator-(CyclotomicValue a, const CyclotomicValue& b) {
    return a -= b;
  }

  // Multiplication by omega^j.
  CyclotomicValue rotated(int j) const;
  // Complex conjugate: omega^k -> omega^-k.
  CyclotomicValue conjugated() const;

 private:
  int q_;
  std::vector<std::int64_t> counts_;
};

// Coefficients (constant term first) of the q-th cyclotomic polynomial,
// built as (x^q - 1) / prod_{d | q, d < q} Phi_d(x).
std::vector<std::int64_t> cyclotomic_polynomial(int q);

// Exact test: Phi_q divides sum_k counts[k] x^k over Z.
bool is_zero(const CyclotomicValue& v);

// True iff a and b denote the same complex number.
bool equal(const CyclotomicValue& a, const CyclotomicValue& b);

// Double-precision evaluation. Components that are exactly zero in Z[omega]
// (decided with is_zero on v +/- conj(v)) come back as +0.0.
std::complex<double> complex_value(const CyclotomicValue& v);

double magnitude(const CyclotomicValue& v);

}  // namespace czcp
