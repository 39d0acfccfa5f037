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
#include <cstddef>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "czcp/sequence.hpp"

namespace czcp {

// Least-squares training matrix for single-RF-chain MIMO channel estimation:
// N_t * J * theta rows, N_t * (lambda + 1) columns, every nonzero entry of
// unit magnitude. Q = J * theta is the number of nonzero entries each
// antenna sends; it defaults to rows / N_t.
class TrainingMatrix {
 public:
  TrainingMatrix(Eigen::MatrixXcd entries, int transmit_antennas, int lambda,
                 int q = 0);

  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
  int transmit_antennas() const noexcept { return nt_; }
  int lambda() const noexcept { return lambda_; }
  int q() const noexcept { return q_; }

 private:
  Eigen::MatrixXcd entries_;
  int nt_;
  int lambda_;
  int q_;
};

inline constexpr double kUnitMagnitudeTolerance = 1e-9;

// sigma2 / (N_t (lambda + 1)) * tr((X^H X)^-1). Throws RankDeficientError
// when X^H X is singular.
double ls_mse(const TrainingMatrix& x, double sigma2);

// Same formula on an arbitrary complex matrix (no unit-magnitude check).
double ls_mse(const Eigen::MatrixXcd& x, int transmit_antennas, int lambda,
              double sigma2);

// sigma2 / Q.
double mse_lower_bound(double sigma2, int q);

// max |X^H X - Q I| <= tol.
bool is_optimal_training(const TrainingMatrix& x, double tol);

// Demonstration layout for a pair (a, b) of length N: a frame of 2 N_t
// slots of N symbols, where antenna i sends a in slot i and b in slot
// N_t + i and is silent otherwise. Column (i, l) is antenna i's frame
// cyclically delayed by l, l = 0..lambda. Only one antenna is active per
// slot. This schedule is an illustration, not a standardized layout.
TrainingMatrix demo_training_matrix(const SequencePair& pair,
                                    int transmit_antennas, int lambda);

// CSV with one complex cell per field written as re+imj.
Eigen::MatrixXcd parse_complex_csv(std::string_view text);
std::string to_complex_csv(const Eigen::MatrixXcd& m);

}  // namespace czcp
