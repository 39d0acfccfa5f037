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
#include <cstdint>
#include <utility>
#include <vector>

#include "czcp/sequence.hpp"

namespace czcp {

// x_var, or its complement 1 - x_var.
struct Literal {
  int var = 0;
  bool complemented = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

// coefficient * prod(literals); an empty literal list is the constant term.
struct Monomial {
  int coefficient = 0;
  std::vector<Literal> literals;
};

// Generalized Boolean function Z_2^m -> Z_q as a sum of monomials. Index i
// evaluates at the bit vector r_i with i = sum_j r_{i,j} 2^j, so variable 0
// is the least significant bit.
class BooleanFunction {
 public:
  BooleanFunction(int m, int q);

  int m() const noexcept { return m_; }
  int q() const noexcept { return q_; }
  const std::vector<Monomial>& terms() const noexcept { return terms_; }

  // Appends coefficient * prod(literals); repeated monomials accumulate.
  BooleanFunction& add(int coefficient, std::vector<Literal> literals = {});

  // Adds every term of `other` (same m and q) scaled by `scale`, each
  // multiplied by the extra `factor` literals.
  BooleanFunction& add_product(const BooleanFunction& other, int scale,
                               const std::vector<Literal>& factor);

  // f(r_i) mod q.
  int evaluate(std::uint64_t index) const;

 private:
  int m_;
  int q_;
  std::vector<Monomial> terms_;
};

inline Literal x(int var) { return {var, false}; }
inline Literal xbar(int var) { return {var, true}; }

// (omega^{f_0}, ..., omega^{f_{2^m - 1}}).
Sequence psi(const BooleanFunction& f);

// psi(f) with the first and last `trim` entries removed; trim < 2^(m-1).
Sequence psi_truncated(const BooleanFunction& f, std::size_t trim);

// True iff `pi` is a permutation of {0, ..., n-1}.
bool is_permutation_of_range(const std::vector<int>& pi, std::size_t n);

// The pair of GBFs g^0, g^1 behind theorem1_pair (exposed for tests and the
// CLI's --dump-gbf).
std::pair<BooleanFunction, BooleanFunction> theorem1_functions(
    int m, int q, const std::vector<int>& pi, int c);

// (psi_L(g^0), psi_L(g^1)) with L = 2^(m-2) - 1: a pair of length
// 2^(m-1) + 2 whose zone width is at least 2^pi(m-3) + 1.
// Requires m >= 4, even q, pi a permutation of {0, ..., m-3}.
SequencePair theorem1_pair(int m, int q, const std::vector<int>& pi, int c);

// Zone width promised for theorem1_pair(m, q, pi, c).
std::size_t theorem1_zone(int m, const std::vector<int>& pi);

// Binary quadratic GBF
//   f = sum_{k<m-1} x_pi(k) x_pi(k+1) + sum_i lin_i x_i + constant
// and its complemented form fbar. Returns the Golay pair
// (psi(f), psi(f + x_pi(m-1))) together with the pair
// (psi(fbar + xbar_pi(m-1)), psi(fbar + 1)), which is one of its mates.
struct GolayMateFromGbf {
  SequencePair pair;
  SequencePair mate;
};
GolayMateFromGbf gbf_golay_mate(int m, const std::vector<int>& pi,
                                const std::vector<int>& linear, int constant);

}  // namespace czcp
