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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "czcp/sequence.hpp"
#include "czcp/verify.hpp"

namespace czcp {

// One parameter point of a construction family together with the zone width
// its construction guarantees.
struct SweepPoint {
  std::string family;
  std::string parameters;
  std::size_t length = 0;
  std::size_t expected_z = 0;
  std::function<SequencePair()> build;
};

struct SweepResult {
  std::string family;
  std::string parameters;
  std::size_t length = 0;
  std::size_t expected_z = 0;
  std::size_t z = 0;
  std::string classification;
  std::string error;  // non-empty when the build or check threw

  bool ok() const noexcept { return error.empty() && z >= expected_z; }
};

// Families: gcp, gbf, insertion, barker, turyn-extend. Points whose output
// is longer than max_length are skipped.
std::vector<SweepPoint> sweep_points(std::string_view family,
                                     std::size_t max_length);

// Up to 5 permutations of {0..n-1}: identity, reversal, then seeded
// shuffles. Deterministic in n.
std::vector<std::vector<int>> sample_permutations(int n, std::size_t count = 5);

// Builds and verifies every point on at most `jobs` threads. Results come
// back in point order whatever the scheduling.
std::vector<SweepResult> run_sweep(const std::vector<SweepPoint>& points,
                                   unsigned jobs);

nlohmann::json to_json(const SweepResult& r);

}  // namespace czcp
