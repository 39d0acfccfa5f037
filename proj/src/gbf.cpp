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

#include "czcp/gbf.hpp"

#include <string>

#include "czcp/error.hpp"

namespace czcp {
namespace {

constexpr int kMaxVariables = 24;

int mod(long v, int q) {
  const long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

}  // namespace

BooleanFunction::BooleanFunction(int m, int q) : m_(m), q_(q) {
  if (m < 0 || m > kMaxVariables) {
    throw UsageError("GBF variable count must be in [0, " +
                     std::to_string(kMaxVariables) + "]");
  }
  if (q < 2 || q > kMaxModulus) throw UsageError("GBF modulus out of range");
}

BooleanFunction& BooleanFunction::add(int coefficient,
                                      std::vector<Literal> literals) {
  for (const Literal& l : literals) {
    if (l.var < 0 || l.var >= m_) {
      throw UsageError("GBF literal x" + std::to_string(l.var) +
                       " outside m=" + std::to_string(m_));
    }
  }
  terms_.push_back({mod(coefficient, q_), std::move(literals)});
  return *this;
}

BooleanFunction& BooleanFunction::add_product(const BooleanFunction& other,
                                              int scale,
                                              const std::vector<Literal>& factor) {
  if (other.m_ != m_) throw UsageError("GBF product over different m");
  for (const Monomial& t : other.terms_) {
    std::vector<Literal> lits = factor;
    lits.insert(lits.end(), t.literals.begin(), t.literals.end());
    add(scale * t.coefficient, std::move(lits));
  }
  return *this;
}

int BooleanFunction::evaluate(std::uint64_t index) const {
  if (index >= (std::uint64_t{1} << m_)) {
    throw UsageError("GBF index " + std::to_string(index) + " outside [0, 2^" +
                     std::to_string(m_) + ")");
  }
  long sum = 0;
  for (const Monomial& t : terms_) {
    int prod = 1;
    for (const Literal& l : t.literals) {
      const int bit = static_cast<int>((index >> l.var) & 1U);
      prod *= l.complemented ? 1 - bit : bit;
      if (prod == 0) break;
    }
    sum += static_cast<long>(t.coefficient) * prod;
  }
  return mod(sum, q_);
}

Sequence psi(const BooleanFunction& f) {
  const std::uint64_t n = std::uint64_t{1} << f.m();
  std::vector<Exponent> v(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    v[i] = static_cast<Exponent>(f.evaluate(i));
  }
  return Sequence(f.q(), std::move(v));
}

Sequence psi_truncated(const BooleanFunction& f, std::size_t trim) {
  const std::size_t n = std::size_t{1} << f.m();
  if (2 * trim >= n) {
    throw UsageError("truncation " + std::to_string(trim) +
                     " leaves nothing of a length-" + std::to_string(n) +
                     " sequence");
  }
  const Sequence full = psi(f);
  const auto v = full.values().subspan(trim, n - 2 * trim);
  return Sequence(f.q(), std::vector<Exponent>(v.begin(), v.end()));
}

bool is_permutation_of_range(const std::vector<int>& pi, std::size_t n) {
  if (pi.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int v : pi) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::pair<BooleanFunction, BooleanFunction> theorem1_functions(
    int m, int q, const std::vector<int>& pi, int c) {
  if (m < 4) throw UsageError("theorem1 needs m >= 4");
  if (q % 2 != 0) throw UsageError("theorem1 needs an even modulus");
  if (!is_permutation_of_range(pi, static_cast<std::size_t>(m - 2))) {
    throw UsageError("pi must be a permutation of {0, ..., m-3}");
  }
  const int half = q / 2;
  const int last = pi[m - 3];

  auto build = [&](int d) {
    // zeta^d and eta^d live on x_0..x_{m-3} with Z_2 coefficients; scaling
    // by q/2 maps Z_2 into Z_q exactly, so their terms are lifted as-is.
    BooleanFunction zeta(m, q);
    BooleanFunction eta(m, q);
    for (int k = 0; k + 1 <= m - 3; ++k) {
      zeta.add(1, {x(pi[k]), x(pi[k + 1])});
      eta.add(1, {xbar(pi[k]), xbar(pi[k + 1])});
    }
    if (d == 1) {
      zeta.add(1, {x(last)});
      eta.add(1);
    } else {
      eta.add(1, {xbar(last)});
    }

    BooleanFunction g(m, q);
    g.add_product(zeta, half, {xbar(m - 1), x(m - 2)});
    g.add_product(eta, half, {x(m - 1), xbar(m - 2)});
    if (d == 0) g.add(half, {x(m - 1), x(m - 2)});
    g.add(c);
    return g;
  };
  return {build(0), build(1)};
}

SequencePair theorem1_pair(int m, int q, const std::vector<int>& pi, int c) {
  auto [g0, g1] = theorem1_functions(m, q, pi, c);
  const std::size_t trim = (std::size_t{1} << (m - 2)) - 1;
  return {psi_truncated(g0, trim), psi_truncated(g1, trim)};
}

std::size_t theorem1_zone(int m, const std::vector<int>& pi) {
  if (m < 4 || !is_permutation_of_range(pi, static_cast<std::size_t>(m - 2))) {
    throw UsageError("theorem1_zone: bad m or permutation");
  }
  return (std::size_t{1} << pi[m - 3]) + 1;
}

GolayMateFromGbf gbf_golay_mate(int m, const std::vector<int>& pi,
                                const std::vector<int>& linear, int constant) {
  if (m < 1) throw UsageError("gbf_golay_mate needs m >= 1");
  if (!is_permutation_of_range(pi, static_cast<std::size_t>(m))) {
    throw UsageError("pi must be a permutation of {0, ..., m-1}");
  }
  if (linear.size() != static_cast<std::size_t>(m)) {
    throw UsageError("need one linear coefficient per variable");
  }
  BooleanFunction f(m, 2);
  BooleanFunction fbar(m, 2);
  for (int k = 0; k + 1 < m; ++k) {
    f.add(1, {x(pi[k]), x(pi[k + 1])});
    fbar.add(1, {xbar(pi[k]), xbar(pi[k + 1])});
  }
  for (int i = 0; i < m; ++i) {
    if (linear[i] % 2 != 0) {
      f.add(1, {x(i)});
      fbar.add(1, {xbar(i)});
    }
  }
  f.add(constant);
  fbar.add(constant);

  BooleanFunction f_end = f;
  f_end.add(1, {x(pi[m - 1])});
  BooleanFunction c = fbar;
  c.add(1, {xbar(pi[m - 1])});
  BooleanFunction d = fbar;
  d.add(1);
  return {{psi(f), psi(f_end)}, {psi(c), psi(d)}};
}

}  // namespace czcp
