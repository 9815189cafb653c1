// Copyright 2026 The qising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qising/ising_oracle.hpp"
#include "support/test_support.hpp"

namespace qising {
namespace {

TEST(Enumerate, IndependentSpins) {
  for (int n : {2, 5, 12})
    for (double h : {-1.0, 0.4, 2.0})
      EXPECT_NEAR(enumerate_magnetization({n, {0.0, h, 1.3}}), std::tanh(1.3 * h), 1e-12);
}

TEST(Enumerate, ZeroFieldBySymmetry) {
  for (double j : {-1.0, 0.2, 1.5}) EXPECT_NEAR(enumerate_magnetization({10, {j, 0.0, 2.0}}), 0.0, 1e-15);
}

TEST(Enumerate, FrozenBruteForceValues) {
  // Direct 30-digit sums over every configuration.
  EXPECT_NEAR(enumerate_magnetization({8, {-0.25, -0.75, 1.0}}), -0.4463251147960189041846661,
              1e-13);
  EXPECT_NEAR(enumerate_magnetization({6, {0.5, 0.3, 1.5}}), 0.8976172889117690885902876, 1e-13);
}

TEST(Enumerate, ClassicalPdPointApproachesLimit) {
  const IsingParams ip{-0.25, -0.75, 1.0};
  const double limit = magnetization(ip);
  const double e16 = enumerate_magnetization({16, ip});
  EXPECT_NEAR(e16, transfer_matrix_finite({16, ip}), 1e-12);
  double previous = INFINITY;
  for (int n : {2, 4, 8, 16}) {
    const double gap = std::abs(enumerate_magnetization({n, ip}) - limit);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
}

TEST(Enumerate, Limits) {
  EXPECT_THROW(enumerate_magnetization({25, {0.1, 0.1, 1.0}}), ResourceError);
  EXPECT_THROW(enumerate_magnetization({1, {0.1, 0.1, 1.0}}), ValidationError);
  EXPECT_THROW(enumerate_magnetization({4, {0.1, 0.1, -1.0}}), ValidationError);
}

TEST(TransferMatrix, AgreesWithEnumeration) {
  testing::Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    const IsingParams ip{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(0.01, 5)};
    const int n = rng.integer(2, 16);
    EXPECT_NEAR(transfer_matrix_finite({n, ip}), enumerate_magnetization({n, ip}), 1e-10)
        << "N=" << n << " J=" << ip.J << " h=" << ip.h << " beta=" << ip.beta;
  }
}

TEST(TransferMatrix, ZeroField) {
  for (int n : {2, 3, 17, 512}) EXPECT_NEAR(transfer_matrix_finite({n, {0.7, 0.0, 2.0}}), 0.0, 1e-12);
}

TEST(TransferMatrix, ConvergesWhereCorrelationLengthIsShort) {
  const IsingParams ip{-0.25, 1.75, 2.0};
  EXPECT_NEAR(transfer_matrix_finite({512, ip}), magnetization(ip), 1e-10);
  const IsingParams pd{-0.25, -0.75, 1.0};
  double previous = INFINITY;
  for (int n = 2; n <= 64; n *= 2) {
    const double gap = std::abs(transfer_matrix_finite({n, pd}) - magnetization(pd));
    if (gap < 1e-13) break;
    EXPECT_LT(gap, previous) << n;
    previous = gap;
  }
}

TEST(TransferMatrix, FiniteRingLagsLimitForLongCorrelations) {
  // beta*J = 10 gives a correlation length far beyond 512 sites, so the
  // finite ring is still visibly short of the limit but closing in.
  const IsingParams ip{2.0, 1e-3, 5.0};
  const double limit = magnetization(ip);
  const double g512 = std::abs(transfer_matrix_finite({512, ip}) - limit);
  const double g4096 = std::abs(transfer_matrix_finite({4096, ip}) - limit);
  EXPECT_GT(g512, 1e-8);
  EXPECT_LT(g4096, g512);
}

TEST(Oracles, OddInField) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const double j = rng.uniform(-2, 2), h = rng.uniform(-2, 2), b = rng.uniform(0.1, 3);
    const int n = rng.integer(2, 12);
    EXPECT_NEAR(enumerate_magnetization({n, {j, -h, b}}), -enumerate_magnetization({n, {j, h, b}}),
                1e-13);
    EXPECT_NEAR(transfer_matrix_finite({n, {j, -h, b}}), -transfer_matrix_finite({n, {j, h, b}}),
                1e-12);
  }
  const auto up = metropolis_magnetization({32, {0.2, 0.5, 1.0}}, 20000, 2000, 9);
  const auto down = metropolis_magnetization({32, {0.2, -0.5, 1.0}}, 20000, 2000, 9);
  EXPECT_NEAR(up.mean, -down.mean, 4 * (up.std_error + down.std_error));
}

TEST(Metropolis, IndependentSpins) {
  const auto est = metropolis_magnetization({128, {0.0, 1.0, 1.0}}, 100000, 1000, 2024);
  EXPECT_GT(est.std_error, 0.0);
  EXPECT_NEAR(est.mean, std::tanh(1.0), 3 * est.std_error);
  EXPECT_EQ(est.seed, 2024u);
  EXPECT_EQ(est.rng, "mt19937_64");
  EXPECT_EQ(est.samples, 99000u);
}

TEST(Metropolis, ZeroField) {
  const auto est = metropolis_magnetization({128, {0.3, 0.0, 1.0}}, 50000, 1000, 5);
  EXPECT_NEAR(est.mean, 0.0, 3 * est.std_error);
}

TEST(Metropolis, QuantumDefectPoint) {
  const ChainSpec spec{128, {-0.25, 1.75, 1.0}};
  const auto est = metropolis_magnetization(spec, 100000, 1000, 77);
  EXPECT_NEAR(est.mean, magnetization(spec.ip), 3 * est.std_error);
}

TEST(Metropolis, DeterministicForSeed) {
  const ChainSpec spec{16, {0.4, 0.2, 1.2}};
  const auto a = metropolis_magnetization(spec, 5000, 500, 3);
  const auto b = metropolis_magnetization(spec, 5000, 500, 3);
  const auto c = metropolis_magnetization(spec, 5000, 500, 4);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_NE(a.mean, c.mean);
}

TEST(Metropolis, Validation) {
  EXPECT_THROW(metropolis_magnetization({16, {0, 0, 1}}, 100, 100, 1), ValidationError);
  EXPECT_THROW(metropolis_magnetization({1, {0, 0, 1}}, 100, 10, 1), ValidationError);
}

}  // namespace
}  // namespace qising
