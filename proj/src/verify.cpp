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

#include "czcp/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>

#include "czcp/error.hpp"

namespace czcp {
namespace {

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;
}

nlohmann::json complex_pair(const CyclotomicValue& v) {
  const auto c = complex_value(v);
  return nlohmann::json::array({round12(c.real()), round12(c.imag())});
}

struct Factorization {
  std::size_t twos = 0;
  std::size_t fives = 0;
  std::size_t thirteens = 0;
  std::size_t rest = 1;
};

Factorization factor(std::size_t n) {
  Factorization f;
  if (n == 0) {
    f.rest = 0;
    return f;
  }
  while (n % 2 == 0) { n /= 2; ++f.twos; }
  while (n % 5 == 0) { n /= 5; ++f.fives; }
  while (n % 13 == 0) { n /= 13; ++f.thirteens; }
  f.rest = n;
  return f;
}

// (a, b, c) with n = 2^a 10^b 26^c, if any.
std::optional<std::array<std::size_t, 3>> golay_exponents(std::size_t n) {
  const Factorization f = factor(n);
  if (f.rest != 1 || f.twos < f.fives + f.thirteens) return std::nullopt;
  return std::array<std::size_t, 3>{f.twos - f.fives - f.thirteens, f.fives,
                                    f.thirteens};
}

std::string abc(const std::array<std::size_t, 3>& e) {
  return "alpha=" + std::to_string(e[0]) + ",beta=" + std::to_string(e[1]) +
         ",gamma=" + std::to_string(e[2]);
}

bool is_power_of(std::size_t n, std::size_t base, std::size_t* exponent) {
  if (n == 0) return false;
  std::size_t e = 0;
  while (n % base == 0) { n /= base; ++e; }
  *exponent = e;
  return n == 1;
}

}  // namespace

std::string_view classification_name(Classification c) {
  switch (c) {
    case Classification::kPerfect: return "perfect";
    case Classification::kOptimal: return "optimal";
    case Classification::kAlmostOptimal: return "almost-optimal";
    case Classification::kNonOptimal: return "non-optimal";
    case Classification::kNotCzcp: return "not-a-CZCP";
  }
  return "unknown";
}

bool is_golay_length(std::size_t n) { return golay_exponents(n).has_value(); }

std::optional<std::size_t> z_max_convention(std::size_t n, int q) {
  if (q != 2 || n == 0 || n % 2 != 0) return std::nullopt;
  return is_golay_length(n) ? n / 2 : n / 2 - 1;
}

CzcpReport measure(CorrelationProfile profile) {
  CzcpReport r;
  r.n = profile.n;
  r.q = profile.q;
  const std::size_t n = profile.n;

  while (r.front_zacz + 1 < n && is_zero(profile.aacs[r.front_zacz + 1])) {
    ++r.front_zacz;
  }
  while (r.tail_zacz + 1 < n && is_zero(profile.aacs[n - 1 - r.tail_zacz])) {
    ++r.tail_zacz;
  }
  while (r.tail_zccz < n && is_zero(profile.accs[n - 1 - r.tail_zccz])) {
    ++r.tail_zccz;
  }
  r.z = std::min({r.front_zacz, r.tail_zacz, r.tail_zccz, n / 2});
  r.profile = std::move(profile);
  return r;
}

CzcpReport verify(const SequencePair& pair) {
  CzcpReport r = measure(profile(pair));
  r.z_max = z_max_convention(r.n, r.q);
  if (r.z_max && *r.z_max > 0) {
    r.czc_ratio = static_cast<double>(r.z) / static_cast<double>(*r.z_max);
  }
  r.classification = classify(r);

  if (!r.z_max) {
    r.notes.push_back(
        "z_max undefined for odd lengths and non-binary alphabets; ratio "
        "omitted");
  } else if (*r.z_max < r.n / 2) {
    r.notes.push_back(
        "z_max = N/2 - 1 is the reporting convention for binary lengths that "
        "are not 2^a 10^b 26^c; it may not be tight");
  }
  if (r.classification == Classification::kAlmostOptimal ||
      r.classification == Classification::kNonOptimal) {
    r.notes.push_back("almost-optimal means z >= ceil(0.9 * z_max)");
  }
  if (r.q == 2 && (r.n == 18 || r.n == 22)) {
    r.notes.push_back(catalog_notes().front());
  }
  return r;
}

Classification classify(const CzcpReport& report) {
  if (report.z == 0) return Classification::kNotCzcp;
  if (report.n % 2 == 0 && report.z == report.n / 2) {
    return Classification::kPerfect;
  }
  if (report.z_max) {
    const std::size_t zmax = *report.z_max;
    if (report.z >= zmax) return Classification::kOptimal;
    const auto threshold =
        static_cast<std::size_t>(std::ceil(kAlmostOptimalShare * zmax));
    if (report.z >= threshold) return Classification::kAlmostOptimal;
  }
  return Classification::kNonOptimal;
}

bool check_property1(const SequencePair& pair, std::size_t z) {
  if (!pair.is_binary()) throw UsageError("edge-symbol check needs a binary pair");
  const std::size_t n = pair.size();
  if (z > n) throw UsageError("zone width exceeds the pair length");
  const auto& c = pair.first();
  const auto& d = pair.second();
  for (std::size_t i = 0; i < z; ++i) {
    if (c[i] != d[i]) return false;
    if (c[n - 1 - i] == d[n - 1 - i]) return false;
  }
  return true;
}

nlohmann::json to_json(const CzcpReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["z"] = r.z;
  j["z_max"] = r.z_max ? nlohmann::json(*r.z_max) : nlohmann::json(nullptr);
  j["czc_ratio"] =
      r.czc_ratio ? nlohmann::json(round12(*r.czc_ratio)) : nlohmann::json(nullptr);
  j["classification"] = classification_name(r.classification);
  j["front_zacz"] = r.front_zacz;
  j["tail_zacz"] = r.tail_zacz;
  j["tail_zccz"] = r.tail_zccz;
  auto aacs = nlohmann::json::array();
  auto accs = nlohmann::json::array();
  for (const auto& v : r.profile.aacs) aacs.push_back(complex_pair(v));
  for (const auto& v : r.profile.accs) accs.push_back(complex_pair(v));
  j["aacs"] = std::move(aacs);
  j["accs"] = std::move(accs);
  j["notes"] = r.notes;
  return j;
}

std::string to_canonical_string(const nlohmann::json& j) { return j.dump(); }

const std::vector<CatalogRow>& catalog() {
  static const std::vector<CatalogRow> rows = {
      {"perfect-gcp", "2^alpha", "2^(alpha-1)", "1", "Optimal"},
      {"perfect-gcp", "2^(alpha+1) 10^beta 26^gamma (alpha>=1)",
       "2^alpha 10^beta 26^gamma", "1", "Optimal"},
      {"gbf", "2^(m-1)+2 (m>=4)", "2^(m-3)+1", "~1/2", "Not optimal"},
      {"insertion", "2^(alpha+1) 10^beta 26^gamma + 2 (alpha>=1)",
       "2^(alpha-1) 10^beta 26^gamma + 1", "~1/2", "Not optimal"},
      {"insertion", "2N+2 (N=10^beta)", "4N/10+1", "~2/5", "Not optimal"},
      {"insertion", "2N+2 (N=26^gamma)", "12N/26+1", "~6/13", "Not optimal"},
      {"insertion", "2N+2 (N=10^beta 26^gamma)", "12N/26+1", "~6/13", "Not optimal"},
      {"barker", "12", "5", "1", "Optimal"},
      {"barker", "24", "11", "1", "Optimal"},
      {"turyn-extend", "12N (N=2^alpha 10^beta 26^gamma)", "5N", "~5/6",
       "Large CZC ratio"},
      {"turyn-extend", "24N (N=2^alpha 10^beta 26^gamma)", "11N", "~11/12",
       "Large CZC ratio"},
  };
  return rows;
}

const std::vector<std::string>& catalog_notes() {
  static const std::vector<std::string> notes = {
      "computer search reports best binary Z of 7 for N=18 and 9 for N=22, "
      "below the N/2-1 convention",
  };
  return notes;
}

std::vector<CatalogMatch> catalog_lookup(std::size_t n) {
  const auto& rows = catalog();
  std::vector<CatalogMatch> out;
  auto emit = [&](std::size_t row, std::size_t z, std::string params) {
    CatalogMatch m;
    m.row = &rows[row];
    m.length = n;
    m.z = z;
    if (const auto zmax = z_max_convention(n, 2); zmax && *zmax > 0) {
      m.czc_ratio = static_cast<double>(z) / static_cast<double>(*zmax);
    }
    m.parameters = std::move(params);
    out.push_back(std::move(m));
  };

  std::size_t e = 0;
  if (is_power_of(n, 2, &e) && e >= 1) {
    emit(0, n / 2, "alpha=" + std::to_string(e));
  }
  if (const auto g = golay_exponents(n); g && (*g)[0] >= 2) {
    emit(1, n / 2, abc({(*g)[0] - 1, (*g)[1], (*g)[2]}));
  }
  if (n >= 10 && is_power_of(n - 2, 2, &e) && e >= 3) {
    emit(2, (std::size_t{1} << (e - 2)) + 1, "m=" + std::to_string(e + 1));
  }
  if (n >= 6 && n % 2 == 0) {
    const std::size_t core = (n - 2) / 2;
    if (const auto g = golay_exponents(core); g && (*g)[0] >= 1) {
      emit(3, core / 2 + 1, abc(*g));
    }
    if (const auto g = golay_exponents(core); g && (*g)[0] == 0) {
      const auto [a, b, c] = *g;
      if (b >= 1 && c == 0) emit(4, 4 * core / 10 + 1, abc(*g));
      if (b == 0 && c >= 1) emit(5, 12 * core / 26 + 1, abc(*g));
      if (b >= 1 && c >= 1) emit(6, 12 * core / 26 + 1, abc(*g));
    }
  }
  if (n == 12) emit(7, 5, "M=5,N=7");
  if (n == 24) emit(8, 11, "M=11,N=13");
  if (n % 12 == 0 && n / 12 >= 2) {
    if (const auto g = golay_exponents(n / 12)) emit(9, 5 * (n / 12), abc(*g));
  }
  if (n % 24 == 0 && n / 24 >= 2) {
    if (const auto g = golay_exponents(n / 24)) emit(10, 11 * (n / 24), abc(*g));
  }
  return out;
}

nlohmann::json to_json(const CatalogRow& row) {
  return {{"source", row.source},
          {"length", row.length_formula},
          {"z", row.z_formula},
          {"czc_ratio", row.ratio_label},
          {"remarks", row.remarks}};
}

nlohmann::json to_json(const CatalogMatch& m) {
  nlohmann::json j = to_json(*m.row);
  j["n"] = m.length;
  j["z_value"] = m.z;
  j["czc_ratio_value"] =
      m.czc_ratio ? nlohmann::json(round12(*m.czc_ratio)) : nlohmann::json(nullptr);
  j["parameters"] = m.parameters;
  return j;
}

}  // namespace czcp
