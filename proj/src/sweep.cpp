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

#include "czcp/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include "czcp/barker.hpp"
#include "czcp/error.hpp"
#include "czcp/gbf.hpp"
#include "czcp/golay.hpp"
#include "czcp/insertion.hpp"

namespace czcp {
namespace {

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ',';
    s += std::to_string(v[i]);
  }
  return s;
}

std::string abc(int a, int b, int c) {
  return "alpha=" + std::to_string(a) + ",beta=" + std::to_string(b) +
         ",gamma=" + std::to_string(c);
}

// Exponent triples with 2^a 10^b 26^c <= limit and a >= min_alpha.
std::vector<std::array<int, 3>> golay_triples(std::size_t limit, int min_alpha) {
  std::vector<std::array<int, 3>> out;
  for (std::size_t p26 = 1, c = 0; p26 <= limit; p26 *= 26, ++c) {
    for (std::size_t p10 = p26, b = 0; p10 <= limit; p10 *= 10, ++b) {
      std::size_t n = p10;
      int a = 0;
      for (; a < min_alpha; ++a) n *= 2;
      for (; n <= limit; n *= 2, ++a) {
        out.push_back({a, static_cast<int>(b), static_cast<int>(c)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto len = [](const auto& t) {
      std::size_t n = 1;
      for (int i = 0; i < t[0]; ++i) n *= 2;
      for (int i = 0; i < t[1]; ++i) n *= 10;
      for (int i = 0; i < t[2]; ++i) n *= 26;
      return n;
    };
    return std::pair(len(x), x) < std::pair(len(y), y);
  });
  return out;
}

void add_gcp(std::vector<SweepPoint>& out, std::size_t max_length) {
  for (const auto& [a, b, c] : golay_triples(max_length, 0)) {
    if (a + b + c == 0) continue;
    const GcpRecipe recipe = GcpRecipe::from_exponents(a, b, c);
    // Any Golay pair has z >= 1; perfect zones are guaranteed for 2^a and
    // for 2^(a+1) 10^b 26^c with a >= 1.
    const bool perfect = (b == 0 && c == 0) || a >= 2;
    out.push_back({"gcp", abc(a, b, c), recipe.length(),
                   perfect ? recipe.length() / 2 : 1,
                   [recipe] { return build_gcp(recipe); }});
  }
}

void add_gbf(std::vector<SweepPoint>& out, std::size_t max_length) {
  for (int m = 4; m <= 20; ++m) {
    const std::size_t len = (std::size_t{1} << (m - 1)) + 2;
    if (len > max_length) break;
    for (int q : {2, 4, 6}) {
      for (const auto& pi : sample_permutations(m - 2)) {
        for (int c : {0, q - 1}) {
          out.push_back({"gbf",
                         "m=" + std::to_string(m) + ",q=" + std::to_string(q) +
                             ",c=" + std::to_string(c) + ",pi=" + join(pi),
                         len, theorem1_zone(m, pi),
                         [m, q, pi, c] { return theorem1_pair(m, q, pi, c); }});
        }
      }
    }
  }
}

void add_insertion(std::vector<SweepPoint>& out, std::size_t max_length) {
  const std::size_t core_limit = max_length < 2 ? 0 : (max_length - 2) / 2;
  for (const auto& [a, b, c] : golay_triples(core_limit, 1)) {
    out.push_back({"insertion", abc(a, b, c),
                   2 * GcpRecipe::from_exponents(a, b, c).length() + 2,
                   theorem2_zone(a, b, c), [a, b, c, max_length] {
                     return theorem2_pair(a, b, c, InsertionSpec{}, max_length);
                   }});
  }
  for (const auto& [a, b, c] : golay_triples(core_limit, 0)) {
    if (a != 0 || (b == 0 && c == 0)) continue;
    const InsertionFamily fam = b == 0   ? InsertionFamily::kTwentySix
                                : c == 0 ? InsertionFamily::kTen
                                         : InsertionFamily::kTenTwentySix;
    out.push_back({"insertion",
                   "family=" + std::string(family_name(fam)) + "," + abc(a, b, c),
                   theorem3_length(fam, b, c), theorem3_zone(fam, b, c),
                   [fam, b, c, max_length] {
                     return theorem3_pair(fam, b, c, InsertionSpec{}, max_length);
                   }});
  }
}

struct BarkerCombo {
  Sequence a;
  Sequence b;
};

// Barker pairs (a, b), |a| <= |b|, that satisfy the concatenation
// precondition.
std::vector<BarkerCombo> barker_combos() {
  std::vector<BarkerCombo> out;
  const auto& table = barker_table();
  for (const auto& ea : table) {
    for (const auto& eb : table) {
      if (ea.n > eb.n) continue;
      for (const auto& a : ea.sequences) {
        for (const auto& b : eb.sequences) {
          try {
            (void)theorem4_pair(a, b);
            out.push_back({a, b});
          } catch (const PreconditionError&) {
          }
        }
      }
    }
  }
  return out;
}

void add_barker(std::vector<SweepPoint>& out, std::size_t max_length) {
  for (const auto& [a, b] : barker_combos()) {
    const std::size_t len = a.size() + b.size();
    if (len > max_length) continue;
    out.push_back({"barker", "a=" + a.to_string() + ",b=" + b.to_string(), len,
                   a.size(), [a, b] { return theorem4_pair(a, b); }});
  }
}

void add_turyn_extend(std::vector<SweepPoint>& out, std::size_t max_length) {
  const std::vector<std::pair<int, int>> seeds = {{5, 7}, {11, 13}};
  for (const auto& [m, n] : seeds) {
    const SequencePair seed = theorem4_pair(barker(m).front(), barker(n).front());
    const std::size_t z = static_cast<std::size_t>(m);
    for (const auto& [a, b, c] : golay_triples(max_length / seed.size(), 0)) {
      if (a + b + c == 0) continue;
      const GcpRecipe recipe = GcpRecipe::from_exponents(a, b, c);
      out.push_back({"turyn-extend",
                     "seed=" + std::to_string(seed.size()) + "," + abc(a, b, c),
                     seed.size() * recipe.length(), z * recipe.length(),
                     [recipe, seed] { return theorem6_extend(build_gcp(recipe), seed); }});
    }
  }
}

}  // namespace

std::vector<std::vector<int>> sample_permutations(int n, std::size_t count) {
  std::vector<std::vector<int>> out;
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  auto push = [&](const std::vector<int>& p) {
    if (out.size() < count && std::find(out.begin(), out.end(), p) == out.end()) {
      out.push_back(p);
    }
  };
  push(id);
  push(std::vector<int>(id.rbegin(), id.rend()));

  std::size_t total = 1;
  for (int i = 2; i <= n && total < 1000; ++i) total *= static_cast<std::size_t>(i);
  std::mt19937 rng(0x5eed0000u + static_cast<unsigned>(n));
  std::vector<int> p = id;
  for (int tries = 0; out.size() < std::min(count, total) && tries < 1000; ++tries) {
    std::shuffle(p.begin(), p.end(), rng);
    push(p);
  }
  return out;
}

std::vector<SweepPoint> sweep_points(std::string_view family,
                                     std::size_t max_length) {
  std::vector<SweepPoint> out;
  if (family == "gcp") {
    add_gcp(out, max_length);
  } else if (family == "gbf") {
    add_gbf(out, max_length);
  } else if (family == "insertion") {
    add_insertion(out, max_length);
  } else if (family == "barker") {
    add_barker(out, max_length);
  } else if (family == "turyn-extend") {
    add_turyn_extend(out, max_length);
  } else {
    throw UsageError("unknown sweep family '" + std::string(family) + "'");
  }
  return out;
}

std::vector<SweepResult> run_sweep(const std::vector<SweepPoint>& points,
                                   unsigned jobs) {
  std::vector<SweepResult> results(points.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const SweepPoint& p = points[i];
      SweepResult& r = results[i];
      r.family = p.family;
      r.parameters = p.parameters;
      r.length = p.length;
      r.expected_z = p.expected_z;
      try {
        const CzcpReport report = verify(p.build());
        r.length = report.n;
        r.z = report.z;
        r.classification = classification_name(report.classification);
      } catch (const std::exception& e) {
        r.error = e.what();
      }
    }
  };

  jobs = std::clamp(jobs, 1u, 64u);
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(points.size(), 1)));
  if (jobs == 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

nlohmann::json to_json(const SweepResult& r) {
  nlohmann::json j = {{"family", r.family},
                      {"parameters", r.parameters},
                      {"n", r.length},
                      {"expected_z", r.expected_z},
                      {"z", r.z},
                      {"classification", r.classification},
                      {"ok", r.ok()}};
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace czcp
