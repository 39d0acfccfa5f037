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

#include "czcp/insertion.hpp"

#include <stdexcept>
#include <string>

#include "czcp/cyclotomic.hpp"
#include "czcp/error.hpp"

namespace czcp {
namespace {

CyclotomicValue root(int q, int k) {
  CyclotomicValue v(q);
  v.add_power(k);
  return v;
}

int mod(int v, int q) { return ((v % q) + q) % q; }

std::size_t ipow(std::size_t base, int e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void check_length(std::size_t out_len, std::size_t max_length) {
  if (out_len > max_length) {
    throw UsageError("construction length " + std::to_string(out_len) +
                     " exceeds the configured bound " +
                     std::to_string(max_length));
  }
}

// a_i = b_i on the first half of the columns and a_i = -b_i on the second.
void require_half_same_structure(const SequencePair& p, const char* what) {
  const std::size_t n = p.size();
  const auto cols = column_sign_profile(p);
  for (std::size_t i = 0; i < n; ++i) {
    const auto want = i < n / 2 ? ColumnSign::kSame : ColumnSign::kDifferent;
    if (cols[i] != want) {
      throw std::logic_error(std::string(what) +
                             " lacks the half-same/half-different column "
                             "structure at column " + std::to_string(i));
    }
  }
}

// e_i = e_{2N-1-i} for i < N/2 and e_i = -e_{2N-1-i} for N/2 <= i < N.
void require_mirror_structure(const Sequence& e) {
  const std::size_t len = e.size();
  const std::size_t n = len / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const bool same = e[i] == e[len - 1 - i];
    if (same != (i < n / 2)) {
      throw std::logic_error("a||c lacks its mirror sign structure at index " +
                             std::to_string(i));
    }
  }
}

}  // namespace

bool validate_spec(const InsertionSpec& spec, int q) {
  if (q < 2 || q > kMaxModulus) return false;
  const auto w = [q](int k) { return root(q, mod(k, q)); };
  return is_zero(w(spec.x0) - w(-spec.y1)) &&
         is_zero(w(spec.x1) + w(-spec.y0)) &&
         is_zero(w(spec.x0) - w(spec.x1)) &&
         is_zero(w(-spec.y0) + w(-spec.y1));
}

Sequence insert_symmetric(const Sequence& a, std::size_t r, int x0, int x1) {
  const std::size_t n = a.size();
  if (n % 2 != 0) throw UsageError("symmetric insertion needs an even length");
  if (r > n) throw UsageError("insertion position r outside [0, N]");
  if (x0 < 0 || x0 >= a.q() || x1 < 0 || x1 >= a.q()) {
    throw UsageError("inserted symbols must be exponents in Z_q");
  }
  const std::size_t slot0 = r;
  const std::size_t slot1 = n - r;
  std::vector<Exponent> out;
  out.reserve(n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    if (slot0 <= slot1) {
      if (i == slot0) out.push_back(static_cast<Exponent>(x0));
      if (i == slot1) out.push_back(static_cast<Exponent>(x1));
    } else {
      if (i == slot1) out.push_back(static_cast<Exponent>(x1));
      if (i == slot0) out.push_back(static_cast<Exponent>(x0));
    }
    if (i < n) out.push_back(a[i]);
  }
  return Sequence(a.q(), std::move(out));
}

Sequence lift_binary(const Sequence& a, int q) {
  if (a.q() == q) return a;
  if (!a.is_binary() || q % 2 != 0) {
    throw UsageError("only binary sequences lift, and only to an even modulus");
  }
  std::vector<Exponent> v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    v[i] = static_cast<Exponent>(a[i] == 0 ? 0 : q / 2);
  }
  return Sequence(q, std::move(v));
}

InsertionTrace insertion_construct(const SequencePair& gcp,
                                   const InsertionSpec& spec) {
  if (!validate_spec(spec)) {
    throw UsageError("inserted symbols violate the insertion conditions");
  }
  const SequencePair m = mate(gcp);
  Sequence e = concat(gcp.first(), m.first());
  Sequence f = concat(gcp.second(), m.second());
  const Sequence e_lift = lift_binary(e, spec.q);
  const Sequence f_lift = lift_binary(f, spec.q);
  // g = I_s(e, 0, {x0, y0}), h = I_s(f, 0, {x1, y1}).
  SequencePair result{insert_symmetric(e_lift, 0, mod(spec.x0, spec.q),
                                       mod(spec.y0, spec.q)),
                      insert_symmetric(f_lift, 0, mod(spec.x1, spec.q),
                                       mod(spec.y1, spec.q))};
  return {gcp, m, std::move(e), std::move(f), std::move(result)};
}

std::size_t theorem2_zone(int alpha, int beta, int gamma) {
  return ipow(2, alpha) * ipow(10, beta) * ipow(26, gamma) / 2 + 1;
}

InsertionTrace theorem2_trace(int alpha, int beta, int gamma,
                              const InsertionSpec& spec,
                              std::size_t max_length) {
  if (alpha < 1) {
    throw UsageError("this insertion family needs alpha >= 1; use --family for "
                     "10^beta / 26^gamma lengths");
  }
  if (beta < 0 || gamma < 0) throw UsageError("beta, gamma must be >= 0");
  const std::size_t n = ipow(2, alpha) * ipow(10, beta) * ipow(26, gamma);
  check_length(2 * n + 2, max_length);

  const SequencePair gcp = build_gcp(GcpRecipe::from_exponents(alpha, beta, gamma));
  require_half_same_structure(gcp, "Turyn GCP");
  InsertionTrace trace = insertion_construct(gcp, spec);
  require_half_same_structure(trace.mate, "complementary mate");
  require_mirror_structure(trace.e);
  return trace;
}

SequencePair theorem2_pair(int alpha, int beta, int gamma,
                           const InsertionSpec& spec, std::size_t max_length) {
  return theorem2_trace(alpha, beta, gamma, spec, max_length).result;
}

InsertionFamily parse_family(std::string_view text) {
  if (text == "10b") return InsertionFamily::kTen;
  if (text == "26g") return InsertionFamily::kTwentySix;
  if (text == "10b26g") return InsertionFamily::kTenTwentySix;
  throw UsageError("unknown insertion family '" + std::string(text) +
                   "' (expected 10b, 26g or 10b26g)");
}

std::string_view family_name(InsertionFamily family) {
  switch (family) {
    case InsertionFamily::kTen: return "10b";
    case InsertionFamily::kTwentySix: return "26g";
    case InsertionFamily::kTenTwentySix: return "10b26g";
  }
  return "?";
}

namespace {

GcpRecipe family_recipe(InsertionFamily family, int beta, int gamma) {
  switch (family) {
    case InsertionFamily::kTen:
      if (beta < 1) throw UsageError("family 10b needs beta >= 1");
      return GcpRecipe::from_exponents(0, beta, 0);
    case InsertionFamily::kTwentySix:
      if (gamma < 1) throw UsageError("family 26g needs gamma >= 1");
      return GcpRecipe::from_exponents(0, 0, gamma);
    case InsertionFamily::kTenTwentySix:
      if (beta < 1 || gamma < 1) {
        throw UsageError("family 10b26g needs beta >= 1 and gamma >= 1");
      }
      return GcpRecipe::from_exponents(0, beta, gamma);
  }
  throw UsageError("unknown insertion family");
}

}  // namespace

std::size_t theorem3_length(InsertionFamily family, int beta, int gamma) {
  return 2 * family_recipe(family, beta, gamma).length() + 2;
}

std::size_t theorem3_zone(InsertionFamily family, int beta, int gamma) {
  const std::size_t n = family_recipe(family, beta, gamma).length();
  if (family == InsertionFamily::kTen) return 4 * n / 10 + 1;
  return 12 * n / 26 + 1;
}

SequencePair theorem3_pair(InsertionFamily family, int beta, int gamma,
                           const InsertionSpec& spec, std::size_t max_length) {
  const GcpRecipe recipe = family_recipe(family, beta, gamma);
  check_length(2 * recipe.length() + 2, max_length);
  return insertion_construct(build_gcp(recipe), spec).result;
}

}  // namespace czcp
