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

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "qising/eisert.hpp"
#include "qising/games.hpp"
#include "support/test_support.hpp"

namespace qising {
namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

std::vector<NamedStrategy> strategies(std::initializer_list<StrategyLabel> labels) {
  std::vector<NamedStrategy> out;
  for (auto l : labels) out.push_back(named_strategy(l));
  return out;
}

TEST(StrategyOperator, Cooperate) {
  EXPECT_TRUE(approx_equal(strategy_operator(StrategyParams(0, 0)), Matrix2::identity()));
}

TEST(StrategyOperator, QuantumIsIZ) {
  const Matrix2 iz({{{kI, 0.0}, {0.0, -kI}}});
  EXPECT_TRUE(approx_equal(strategy_operator(StrategyParams(0, kPi / 2)), iz));
}

TEST(StrategyOperator, DefectIsColumnSignedX) {
  const Matrix2 expected({{{0.0, 1.0}, {-1.0, 0.0}}});
  EXPECT_TRUE(approx_equal(strategy_operator(StrategyParams(kPi, 0)), expected));
}

TEST(StrategyOperator, RejectsOutOfRange) {
  EXPECT_THROW(StrategyParams(-0.1, 0.0), DomainError);
  EXPECT_THROW(StrategyParams(kPi + 0.1, 0.0), DomainError);
  EXPECT_THROW(StrategyParams(0.0, kPi), DomainError);
  EXPECT_THROW(Entanglement(-0.01), DomainError);
  EXPECT_THROW(Entanglement(1.6), DomainError);
  EXPECT_NO_THROW(Entanglement(1.5707963267949));
}

TEST(Entangler, NoEntanglementIsIdentity) {
  EXPECT_TRUE(approx_equal(entangler(Entanglement(0)), Matrix4::identity()));
}

TEST(Entangler, MaximalEntries) {
  const Matrix4 l = entangler(Entanglement(kPi / 2));
  const double r = 1 / std::sqrt(2.0);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(std::abs(l(i, i) - r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(0, 3) - kI * r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(3, 0) - kI * r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(1, 2) + kI * r), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(l(2, 1) + kI * r), 0.0, 1e-15);
  EXPECT_EQ(l(0, 1), Complex{});
}

TEST(FinalState, CooperateCooperateIsGround) {
  const auto c = named_strategy(StrategyLabel::C).params;
  for (double g : {0.0, 0.4, 1.1, kPi / 2}) {
    const auto prob = final_state(c, c, Entanglement(g)).probabilities();
    EXPECT_NEAR(prob[0], 1.0, 1e-12);
  }
}

TEST(FinalState, QuantumQuantumIsMinusGround) {
  const auto q = named_strategy(StrategyLabel::Q).params;
  for (double g : {0.0, 0.4, 1.1, kPi / 2}) {
    const StateVector4 chi = final_state(q, q, Entanglement(g));
    StateVector4 expected;
    expected[0] = -1.0;
    EXPECT_TRUE(approx_equal(chi, expected)) << g;
  }
}

TEST(FinalState, DefectAgainstQuantum) {
  const auto d = named_strategy(StrategyLabel::D).params;
  const auto q = named_strategy(StrategyLabel::Q).params;
  for (double g = 0.0; g <= kPi / 2; g += 0.05) {
    const StateVector4 chi = final_state(d, q, Entanglement(g));
    StateVector4 expected;
    expected[1] = std::sin(g);
    expected[2] = -kI * std::cos(g);
    EXPECT_TRUE(approx_equal(chi, expected)) << g;
  }
}

TEST(FinalState, LiteralPauliXWouldLoseGammaDependence) {
  // With D = X the (D,Q) row payoff stays at t for every gamma, which is why
  // the catalog binds D to O(pi, 0).
  const PDPayoffs pd{3, 5, 0, 1};
  const Matrix2 x({{{0.0, 1.0}, {1.0, 0.0}}});
  const Matrix2 iz({{{kI, 0.0}, {0.0, -kI}}});
  for (double g : {0.3, 0.9, kPi / 2}) {
    const Matrix4 l = entangler(Entanglement(g));
    const StateVector4 chi = apply(adjoint(l), apply(kron(x, iz), apply(l, StateVector4::basis(0))));
    EXPECT_NEAR(payoff(chi, row_template(pd)), 5.0, 1e-12);
  }
}

TEST(Payoff, GroundStatePaysReward) {
  EXPECT_DOUBLE_EQ(payoff(StateVector4::basis(0), row_template(PDPayoffs{3, 5, 0, 1})), 3.0);
}

TEST(Payoff, DefectAgainstQuantumMatchesClosedForm) {
  const PDPayoffs pd{3, 5, 0, 1};
  const auto d = named_strategy(StrategyLabel::D).params;
  const auto q = named_strategy(StrategyLabel::Q).params;
  for (double g = 0.0; g <= kPi / 2; g += 0.01) {
    const double expected = 5 * std::cos(g) * std::cos(g);
    EXPECT_NEAR(payoff(final_state(d, q, Entanglement(g)), row_template(pd)), expected,
                1e-12);
  }
}

TEST(Payoff, ConvexCombinationBounds) {
  testing::Rng rng(21);
  const PayoffTemplate t{.v00 = -1.5, .v10 = 4.0, .v01 = 0.25, .v11 = 2.0};
  for (int trial = 0; trial < 500; ++trial) {
    const StrategyParams a(rng.uniform(0, kPi), rng.uniform(0, kPi / 2));
    const StrategyParams b(rng.uniform(0, kPi), rng.uniform(0, kPi / 2));
    const double v = payoff(final_state(a, b, Entanglement(rng.uniform(0, kPi / 2))), t);
    EXPECT_GE(v, -1.5 - 1e-12);
    EXPECT_LE(v, 4.0 + 1e-12);
  }
}

TEST(ExtendedMatrix, MaximalEntanglementPrisonersDilemma) {
  const PDPayoffs pd{3, 5, 0, 1};
  const auto g = extended_matrix(row_template(pd), col_template(pd),
                                 strategies({StrategyLabel::C, StrategyLabel::D,
                                             StrategyLabel::Q}),
                                 Entanglement(kPi / 2));
  const double expected[3][3][2] = {{{3, 3}, {0, 5}, {1, 1}},
                                    {{5, 0}, {1, 1}, {0, 5}},
                                    {{1, 1}, {5, 0}, {3, 3}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      EXPECT_NEAR(g.row_payoff(i, j), expected[i][j][0], 1e-12);
      EXPECT_NEAR(g.col_payoff(i, j), expected[i][j][1], 1e-12);
    }
}

TEST(ExtendedMatrix, NoEntanglementQuantumEqualsCooperate) {
  const PDPayoffs pd{3, 5, 0, 1};
  const auto g = extended_matrix(row_template(pd), col_template(pd),
                                 strategies({StrategyLabel::C, StrategyLabel::D,
                                             StrategyLabel::Q}),
                                 Entanglement(0));
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(g.row_payoff(2, k), g.row_payoff(0, k), 1e-12);
    EXPECT_NEAR(g.col_payoff(2, k), g.col_payoff(0, k), 1e-12);
    EXPECT_NEAR(g.row_payoff(k, 2), g.row_payoff(k, 0), 1e-12);
    EXPECT_NEAR(g.col_payoff(k, 2), g.col_payoff(k, 0), 1e-12);
  }
}

TEST(ExtendedMatrix, ChickenSwerveAgainstQuantum) {
  const ChickenPayoffs ch{3, 4};
  const auto s = strategies({StrategyLabel::Swerve, StrategyLabel::Straight, StrategyLabel::Q});
  for (double gamma = 0; gamma <= kPi / 2; gamma += 0.1) {
    const auto g = extended_matrix(row_template(ch), col_template(ch), s, Entanglement(gamma));
    const double expected = -4 * std::sin(gamma) * std::sin(gamma);
    EXPECT_NEAR(g.row_payoff(0, 2), expected, 1e-12);
    EXPECT_NEAR(g.col_payoff(0, 2), expected, 1e-12);
  }
}

TEST(ExtendedMatrix, RejectsEmptyAndDuplicates) {
  const PDPayoffs pd{3, 5, 0, 1};
  std::vector<NamedStrategy> none;
  EXPECT_THROW(extended_matrix(row_template(pd), col_template(pd), none, Entanglement(0)),
               ValidationError);
  EXPECT_THROW(extended_matrix(row_template(pd), col_template(pd),
                               strategies({StrategyLabel::C, StrategyLabel::C}),
                               Entanglement(0)),
               ValidationError);
}

// Classical sector is gamma independent; alpha identities hold on a grid.
TEST(ExtendedMatrix, ClassicalSectorAndAlphaIdentities) {
  testing::Rng rng(77);
  const auto pd_s = strategies({StrategyLabel::C, StrategyLabel::D, StrategyLabel::Q});
  const auto ch_s = strategies({StrategyLabel::Swerve, StrategyLabel::Straight, StrategyLabel::Q});
  for (int trial = 0; trial < 5; ++trial) {
    const PDPayoffs pd = testing::random_pd(rng);
    const ChickenPayoffs ch = testing::random_chicken(rng);
    for (int k = 0; k < 100; ++k) {
      const double gamma = kPi / 2 * k / 99;
      const double c2 = std::cos(gamma) * std::cos(gamma);
      const double s2 = std::sin(gamma) * std::sin(gamma);
      const auto g = extended_matrix(row_template(pd), col_template(pd), pd_s, Entanglement(gamma));
      EXPECT_NEAR(g.row_payoff(0, 0), pd.r, 1e-12);
      EXPECT_NEAR(g.row_payoff(0, 1), pd.s, 1e-12);
      EXPECT_NEAR(g.row_payoff(1, 0), pd.t, 1e-12);
      EXPECT_NEAR(g.row_payoff(1, 1), pd.p, 1e-12);
      EXPECT_NEAR(g.col_payoff(0, 1), pd.t, 1e-12);
      EXPECT_NEAR(g.row_payoff(0, 2), pd.r * c2 + pd.p * s2, 1e-12);
      EXPECT_NEAR(g.row_payoff(2, 0), pd.r * c2 + pd.p * s2, 1e-12);
      EXPECT_NEAR(g.row_payoff(2, 1), pd.t * s2 + pd.s * c2, 1e-12);
      EXPECT_NEAR(g.row_payoff(1, 2), pd.t * c2 + pd.s * s2, 1e-12);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
          EXPECT_NEAR(g.row_payoff(i, j), g.col_payoff(j, i), 1e-12);

      const auto h = extended_matrix(row_template(ch), col_template(ch), ch_s, Entanglement(gamma));
      EXPECT_NEAR(h.row_payoff(0, 0), 0.0, 1e-12);
      EXPECT_NEAR(h.row_payoff(0, 1), -ch.r, 1e-12);
      EXPECT_NEAR(h.row_payoff(1, 0), ch.r, 1e-12);
      EXPECT_NEAR(h.row_payoff(1, 1), -ch.s, 1e-12);
      EXPECT_NEAR(h.row_payoff(2, 1), -ch.r * std::cos(2 * gamma), 1e-12);
      EXPECT_NEAR(h.row_payoff(1, 2), ch.r * std::cos(2 * gamma), 1e-12);
    }
  }
}

}  // namespace
}  // namespace qising
