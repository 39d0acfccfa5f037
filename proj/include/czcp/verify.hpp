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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "czcp/correlation.hpp"
#include "czcp/sequence.hpp"

namespace czcp {

enum class Classification {
  kPerfect,
  kOptimal,
  kAlmostOptimal,
  kNonOptimal,
  kNotCzcp,
};

std::string_view classification_name(Classification c);

// Zone measurements of a pair. All zero tests are exact.
//   front_zacz: widest F with aacs[tau] = 0 for tau in [1, F]
//   tail_zacz:  widest T with aacs[tau] = 0 for tau in [N - T, N - 1], T < N
//   tail_zccz:  widest T with accs[tau] = 0 for tau in [N - T, N - 1]
//   z = min(front_zacz, tail_zacz, tail_zccz, floor(N / 2))
struct CzcpReport {
  std::size_t n = 0;
  int q = 2;
  std::size_t front_zacz = 0;
  std::size_t tail_zacz = 0;
  std::size_t tail_zccz = 0;
  std::size_t z = 0;
  std::optional<std::size_t> z_max;
  std::optional<double> czc_ratio;
  Classification classification = Classification::kNotCzcp;
  CorrelationProfile profile;
  std::vector<std::string> notes;

  bool is_czcp() const noexcept { return z >= 1; }
};

// Share of z_max at or above which a non-optimal pair counts as
// almost-optimal.
inline constexpr double kAlmostOptimalShare = 0.9;

CzcpReport verify(const SequencePair& pair);

// Zone widths only (no z_max, ratio or classification).
CzcpReport measure(CorrelationProfile profile);

// Reference Z_max for reporting CZC ratios: for binary even n, n/2 when n
// is 2^a 10^b 26^c and n/2 - 1 otherwise. Undefined (nullopt) for odd n and
// for q > 2.
std::optional<std::size_t> z_max_convention(std::size_t n, int q);

Classification classify(const CzcpReport& report);

// c_i = d_i and c_{N-1-i} = -d_{N-1-i} for i < z. Binary pairs only.
bool check_property1(const SequencePair& pair, std::size_t z);

// Canonical JSON (sorted keys, 12 significant digits).
nlohmann::json to_json(const CzcpReport& report);
std::string to_canonical_string(const nlohmann::json& j);

// True when n = 2^a 10^b 26^c for non-negative a, b, c.
bool is_golay_length(std::size_t n);

// One row of the parameter table of systematic constructions.
struct CatalogRow {
  std::string source;
  std::string length_formula;
  std::string z_formula;
  std::string ratio_label;
  std::string remarks;
};

// A catalog row instantiated at a concrete length.
struct CatalogMatch {
  const CatalogRow* row = nullptr;
  std::size_t length = 0;
  std::size_t z = 0;
  std::optional<double> czc_ratio;
  std::string parameters;  // e.g. "alpha=1,beta=0,gamma=0"
};

const std::vector<CatalogRow>& catalog();
std::vector<CatalogMatch> catalog_lookup(std::size_t length);
const std::vector<std::string>& catalog_notes();

nlohmann::json to_json(const CatalogRow& row);
nlohmann::json to_json(const CatalogMatch& match);

}  // namespace czcp
