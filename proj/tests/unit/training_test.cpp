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

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "czcp/barker.hpp"
#include "czcp/error.hpp"
#include "czcp/training.hpp"

namespace czcp {
namespace {

using Eigen::MatrixXcd;

std::complex<double> phase(std::mt19937_64& rng) {
  return std::polar(1.0, std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng));
}

// Single-RF-chain layout: every row belongs to exactly one antenna and only
// that antenna's lambda+1 columns are nonzero there. Q rows per antenna.
// With `optimal`, each antenna block is Q columns of a phase-scrambled DFT.
MatrixXcd structured(std::mt19937_64& rng, int nt, int lambda, int q, bool optimal) {
  const int taps = lambda + 1;
  MatrixXcd x = MatrixXcd::Zero(nt * q, nt * taps);
  std::vector<int> rows(nt * q);
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  for (int ant = 0; ant < nt; ++ant) {
    for (int r = 0; r < q; ++r) {
      const int row = rows[ant * q + r];
      const std::complex<double> scramble = phase(rng);
      for (int l = 0; l < taps; ++l) {
        x(row, ant * taps + l) =
            optimal ? scramble * std::polar(1.0, 2 * std::numbers::pi * r * l / q)
                    : phase(rng);
      }
    }
  }
  return x;
}

TEST(LsMse, IdentityExample) {
  const TrainingMatrix x(MatrixXcd::Identity(1, 1), 1, 0);
  EXPECT_DOUBLE_EQ(ls_mse(x, 0.5), 0.5);
}

TEST(LsMse, RankDeficient) {
  const TrainingMatrix x(MatrixXcd::Ones(4, 2), 2, 0, 2);
  EXPECT_THROW(ls_mse(x, 1.0), RankDeficientError);
}

TEST(Bound, Examples) {
  EXPECT_DOUBLE_EQ(mse_lower_bound(1.0, 4), 0.25);
  EXPECT_DOUBLE_EQ(mse_lower_bound(0.1, 10), 0.01);
  EXPECT_THROW(mse_lower_bound(1.0, 0), UsageError);
}

TEST(Optimality, Examples) {
  std::mt19937_64 rng(1);
  const TrainingMatrix good(structured(rng, 1, 3, 8, true), 1, 3);
  EXPECT_TRUE(is_optimal_training(good, 1e-9));
  EXPECT_NEAR(ls_mse(good, 2.0), mse_lower_bound(2.0, 8), 1e-12);
  EXPECT_FALSE(is_optimal_training(TrainingMatrix(MatrixXcd::Ones(4, 2), 1, 1), 1e-9));
  MatrixXcd id = MatrixXcd::Identity(3, 3);
  id(2, 2) = 0;
  EXPECT_FALSE(is_optimal_training(TrainingMatrix(id, 3, 0, 1), 1e-9));
}

TEST(TrainingMatrix, Invariants) {
  EXPECT_THROW(TrainingMatrix(MatrixXcd::Ones(4, 3), 2, 0), UsageError);
  MatrixXcd bad = MatrixXcd::Ones(2, 2);
  bad(0, 0) = 0.5;
  EXPECT_THROW(TrainingMatrix(bad, 1, 1), UsageError);
  EXPECT_EQ(TrainingMatrix(MatrixXcd::Ones(6, 2), 2, 0).q(), 3);
}

TEST(LsMse, RandomStructuredMatricesRespectBound) {
  std::mt19937_64 rng(2024);
  int optimal_seen = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int nt = 1 + trial % 3;
    const int lambda = trial % 4;
    const int q = lambda + 1 + static_cast<int>(rng() % 6);
    const bool want_optimal = trial % 5 == 0;
    const TrainingMatrix x(structured(rng, nt, lambda, q, want_optimal), nt, lambda);
    const double sigma2 = 0.1 + (trial % 7);
    const double bound = mse_lower_bound(sigma2, x.q());
    double mse = 0;
    try {
      mse = ls_mse(x, sigma2);
    } catch (const RankDeficientError&) {
      continue;
    }
    ASSERT_GE(mse, bound * (1 - 1e-12)) << trial;
    const bool equal = std::abs(mse - bound) <= 1e-9 * bound;
    ASSERT_EQ(equal, is_optimal_training(x, 1e-9)) << trial;
    optimal_seen += equal;
  }
  EXPECT_GE(optimal_seen, 150);
}

TEST(LsMse, UnitaryInvariance) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const MatrixXcd x = structured(rng, 2, 1, 5, false);
    MatrixXcd z(x.rows(), x.rows());
    for (Eigen::Index i = 0; i < z.size(); ++i) z(i) = {g(rng), g(rng)};
    const MatrixXcd u = Eigen::HouseholderQR<MatrixXcd>(z).householderQ();
    EXPECT_NEAR(ls_mse(x, 2, 1, 1.0), ls_mse(u * x, 2, 1, 1.0), 1e-9);
  }
}

TEST(Demo, BarkerPairIsOptimalWithinZone) {
  const SequencePair p = theorem4_pair(barker(5)[0], barker(7)[0]);
  for (int nt : {2, 3, 4}) {
    for (int lambda = 0; lambda <= 5; ++lambda) {
      const TrainingMatrix x = demo_training_matrix(p, nt, lambda);
      EXPECT_EQ(x.q(), 24);
      EXPECT_TRUE(is_optimal_training(x, 1e-6)) << nt << " " << lambda;
      EXPECT_NEAR(ls_mse(x, 1.0), mse_lower_bound(1.0, 24), 1e-12);
    }
  }
  EXPECT_FALSE(is_optimal_training(demo_training_matrix(p, 2, 6), 1e-6));
}

TEST(Csv, RoundTripAndForms) {
  const MatrixXcd m = parse_complex_csv("1+0j, -1-0.5j\n# note\n2j,-j\n3,1e-3+2E+1j\n");
  ASSERT_EQ(m.rows(), 3);
  EXPECT_EQ(m(0, 1), std::complex<double>(-1, -0.5));
  EXPECT_EQ(m(1, 0), std::complex<double>(0, 2));
  EXPECT_EQ(m(1, 1), std::complex<double>(0, -1));
  EXPECT_EQ(m(2, 1), std::complex<double>(1e-3, 20));
  EXPECT_EQ(parse_complex_csv(to_complex_csv(m)), m);
  EXPECT_THROW(parse_complex_csv("1,2\n3\n"), UsageError);
  EXPECT_THROW(parse_complex_csv("1+xj"), UsageError);
  EXPECT_THROW(parse_complex_csv(""), UsageError);
}

}  // namespace
}  // namespace czcp
