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

#ifndef QISING_EISERT_HPP_
#define QISING_EISERT_HPP_

// Eisert-Wilkens-Lewenstein quantization of a 2x2 game.
//
// Each player applies a local unitary O(theta, phi) to their half of the
// entangled state L|00>; the state is disentangled by L^dagger and measured.
// Payoffs are the classical payoffs weighted by the outcome probabilities.

#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qising/bimatrix.hpp"
#include "qising/errors.hpp"
#include "qising/tensor.hpp"

namespace qising {

// Slack on the closed angle intervals so that decimal inputs such as
// 1.5707963267949 are not rejected for exceeding pi/2 in the last ulp.
inline constexpr double kAngleSlack = 1e-12;

class StrategyParams {
 public:
  StrategyParams(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= -kAngleSlack && theta <= std::numbers::pi + kAngleSlack))
      throw DomainError("strategy theta must lie in [0, pi]");
    if (!(phi >= -kAngleSlack && phi <= std::numbers::pi / 2 + kAngleSlack))
      throw DomainError("strategy phi must lie in [0, pi/2]");
  }
  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

class Entanglement {
 public:
  explicit Entanglement(double gamma) : gamma_(gamma) {
    if (!(gamma >= -kAngleSlack && gamma <= std::numbers::pi / 2 + kAngleSlack))
      throw DomainError("entanglement gamma must lie in [0, pi/2]");
  }
  double gamma() const { return gamma_; }

 private:
  double gamma_;
};

// Classical payoffs of one player indexed by measured outcome. The first
// digit is the row player's qubit: v10 is "row played 1, column played 0".
struct PayoffTemplate {
  double v00 = 0.0;
  double v10 = 0.0;
  double v01 = 0.0;
  double v11 = 0.0;
};

enum class StrategyLabel { C, D, Q, Swerve, Straight };

inline std::string_view to_string(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::C: return "C";
    case StrategyLabel::D: return "D";
    case StrategyLabel::Q: return "Q";
    case StrategyLabel::Swerve: return "Swerve";
    case StrategyLabel::Straight: return "Straight";
  }
  return "?";
}

struct NamedStrategy {
  StrategyLabel label;
  StrategyParams params;
};

// Catalog binding of labels to angles. Defection / straight is O(pi, 0),
// which is iY rather than the Pauli X; only O(pi, 0) reproduces the
// gamma-dependent payoffs against Q.
inline NamedStrategy named_strategy(StrategyLabel label) {
  switch (label) {
    case StrategyLabel::C:
    case StrategyLabel::Swerve:
      return {label, StrategyParams(0.0, 0.0)};
    case StrategyLabel::D:
    case StrategyLabel::Straight:
      return {label, StrategyParams(std::numbers::pi, 0.0)};
    case StrategyLabel::Q:
      return {label, StrategyParams(0.0, std::numbers::pi / 2)};
  }
  throw DomainError("unknown strategy label");
}

inline Matrix2 strategy_operator(const StrategyParams& p) {
  const double c = std::cos(p.theta() / 2);
  const double s = std::sin(p.theta() / 2);
  const Complex phase = std::polar(1.0, p.phi());
  return Matrix2({{{phase * c, Complex{s, 0.0}},
                   {Complex{-s, 0.0}, std::conj(phase) * c}}});
}

inline Matrix4 entangler(const Entanglement& g) {
  const Complex c{std::cos(g.gamma() / 2), 0.0};
  const Complex is{0.0, std::sin(g.gamma() / 2)};
  const Complex zero{};
  return Matrix4({{{c, zero, zero, is},
                   {zero, c, -is, zero},
                   {zero, -is, c, zero},
                   {is, zero, zero, c}}});
}

// L^dagger (O1 (x) O2) L |00>.
inline StateVector4 final_state(const StrategyParams& row,
                                const StrategyParams& col,
                                const Entanglement& g) {
  const Matrix4 l = entangler(g);
  const Matrix4 local = kron(strategy_operator(row), strategy_operator(col));
  StateVector4 psi = apply_unitary(l, StateVector4::basis(0));
  psi = apply_unitary(local, psi);
  return apply_unitary(adjoint(l), psi);
}

// Probabilities below this are amplitude rounding noise (|z| ~ 1e-16 gives
// |z|^2 ~ 1e-32) and are dropped, so that symmetric blocks stay exactly
// symmetric.
inline constexpr double kProbabilityFloor = 1e-28;

inline double payoff(const StateVector4& chi, const PayoffTemplate& t) {
  auto prob = chi.probabilities();
  for (auto& q : prob)
    if (q < kProbabilityFloor) q = 0.0;
  return t.v00 * prob[0] + t.v01 * prob[1] + t.v10 * prob[2] +
         t.v11 * prob[3];
}

// Quantized bimatrix over `strategies` (used for both players).
inline BimatrixGame extended_matrix(const PayoffTemplate& row_template,
                                    const PayoffTemplate& col_template,
                                    std::span<const NamedStrategy> strategies,
                                    const Entanglement& g) {
  if (strategies.empty())
    throw ValidationError("extended_matrix: strategy list is empty");
  std::vector<std::string> labels;
  for (const auto& s : strategies) {
    std::string name(to_string(s.label));
    for (const auto& seen : labels)
      if (seen == name)
        throw ValidationError("extended_matrix: duplicate strategy " + name);
    labels.push_back(std::move(name));
  }
  std::vector<std::pair<double, double>> cells;
  cells.reserve(strategies.size() * strategies.size());
  for (const auto& si : strategies)
    for (const auto& sj : strategies) {
      const StateVector4 chi = final_state(si.params, sj.params, g);
      cells.emplace_back(payoff(chi, row_template), payoff(chi, col_template));
    }
  return BimatrixGame(std::move(labels), std::move(cells));
}

}  // namespace qising

#endif  // QISING_EISERT_HPP_
