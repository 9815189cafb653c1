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

#ifndef QISING_GAMES_HPP_
#define QISING_GAMES_HPP_

// Prisoner's Dilemma and Chicken, their quantization templates, and the
// 2x2 "classical strategy versus Q" blocks that get mapped onto a spin chain.

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "qising/bimatrix.hpp"
#include "qising/eisert.hpp"
#include "qising/errors.hpp"

namespace qising {

using Matrix2x2 = std::array<std::array<double, 2>, 2>;

// General 2x2 game: row payoffs a b / c d, column payoffs a' b' / c' d'.
struct ClassicalGame {
  Matrix2x2 row{};
  Matrix2x2 col{};
  std::array<std::string, 2> labels;
  // Set when parameters sit on the boundary of the admissible region.
  std::optional<std::string> warning;

  BimatrixGame to_bimatrix() const {
    std::vector<std::pair<double, double>> cells;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) cells.emplace_back(row[i][j], col[i][j]);
    return BimatrixGame({labels[0], labels[1]}, std::move(cells));
  }
};

struct PDPayoffs {
  double r;  // reward
  double t;  // temptation
  double s;  // sucker
  double p;  // punishment

  // Throws ValidationError naming the first violated inequality of t > r > p > s.
  void validate() const {
    if (!std::isfinite(r) || !std::isfinite(t) || !std::isfinite(s) ||
        !std::isfinite(p))
      throw ValidationError("prisoner's dilemma payoffs must be finite");
    if (!(t > r)) throw ValidationError("t > r violated");
    if (!(r > p)) throw ValidationError("r > p violated");
    if (!(p > s)) throw ValidationError("p > s violated");
  }
};

struct ChickenPayoffs {
  double r;  // reputation
  double s;  // injury cost

  // Admissible region is s > r > 0. The edge s == r is accepted and
  // reported through the returned warning.
  std::optional<std::string> validate() const {
    if (!std::isfinite(r) || !std::isfinite(s))
      throw ValidationError("chicken payoffs must be finite");
    if (!(r > 0)) throw ValidationError("r > 0 violated");
    if (s < r) throw ValidationError("s > r violated");
    if (s == r) return "s == r is on the boundary of s > r; accepted";
    return std::nullopt;
  }
};

using GamePayoffs = std::variant<PDPayoffs, ChickenPayoffs>;

enum class GameKind { PD, Chicken };

enum class BlockId { QvC, QvD, QvSwerve, QvStraight, ClassicalPD, ClassicalChicken };

inline std::string_view to_string(BlockId id) {
  switch (id) {
    case BlockId::QvC: return "QvC";
    case BlockId::QvD: return "QvD";
    case BlockId::QvSwerve: return "QvSwerve";
    case BlockId::QvStraight: return "QvStraight";
    case BlockId::ClassicalPD: return "ClassicalPD";
    case BlockId::ClassicalChicken: return "ClassicalChicken";
  }
  return "?";
}

inline GameKind game_kind_of(BlockId id) {
  switch (id) {
    case BlockId::QvC:
    case BlockId::QvD:
    case BlockId::ClassicalPD:
      return GameKind::PD;
    default:
      return GameKind::Chicken;
  }
}

inline GameKind game_kind_of(const GamePayoffs& payoffs) {
  return std::holds_alternative<PDPayoffs>(payoffs) ? GameKind::PD
                                                    : GameKind::Chicken;
}

// Row/column order of each block; the first strategy is spin +1.
inline std::array<StrategyLabel, 2> block_strategies(BlockId id) {
  using S = StrategyLabel;
  switch (id) {
    case BlockId::QvC: return {S::C, S::Q};
    case BlockId::QvD: return {S::Q, S::D};
    case BlockId::QvSwerve: return {S::Swerve, S::Q};
    case BlockId::QvStraight: return {S::Q, S::Straight};
    case BlockId::ClassicalPD: return {S::C, S::D};
    case BlockId::ClassicalChicken: return {S::Straight, S::Swerve};
  }
  throw DomainError("unknown block id");
}

struct StrategyBlock {
  Matrix2x2 row_payoffs{};
  std::array<StrategyLabel, 2> labels{};
  BlockId block_id{};

  double a() const { return row_payoffs[0][0]; }
  double b() const { return row_payoffs[0][1]; }
  double c() const { return row_payoffs[1][0]; }
  double d() const { return row_payoffs[1][1]; }

  BimatrixGame to_bimatrix() const {
    return BimatrixGame::symmetric<2>(
        {std::string(to_string(labels[0])), std::string(to_string(labels[1]))},
        row_payoffs);
  }
};

// Measurement templates. Qubit value 0 is C / Swerve, 1 is D / Straight.
inline PayoffTemplate row_template(const PDPayoffs& g) {
  return {.v00 = g.r, .v10 = g.t, .v01 = g.s, .v11 = g.p};
}
inline PayoffTemplate col_template(const PDPayoffs& g) {
  return {.v00 = g.r, .v10 = g.s, .v01 = g.t, .v11 = g.p};
}
inline PayoffTemplate row_template(const ChickenPayoffs& g) {
  return {.v00 = 0.0, .v10 = g.r, .v01 = -g.r, .v11 = -g.s};
}
inline PayoffTemplate col_template(const ChickenPayoffs& g) {
  return {.v00 = 0.0, .v10 = -g.r, .v01 = g.r, .v11 = -g.s};
}

inline ClassicalGame pd_game(const PDPayoffs& g) {
  g.validate();
  ClassicalGame out;
  out.row = {{{g.r, g.s}, {g.t, g.p}}};
  out.col = {{{g.r, g.t}, {g.s, g.p}}};
  out.labels = {"C", "D"};
  return out;
}

// Ordered (straight, swerve).
inline ClassicalGame chicken_game(const ChickenPayoffs& g) {
  ClassicalGame out;
  out.warning = g.validate();
  out.row = {{{-g.s, g.r}, {-g.r, 0.0}}};
  out.col = {{{-g.s, -g.r}, {g.r, 0.0}}};
  out.labels = {"Straight", "Swerve"};
  return out;
}

// Full quantized game over {C, D, Q} or {Swerve, Straight, Q}.
inline BimatrixGame quantized_game(const GamePayoffs& payoffs,
                                   const Entanglement& g) {
  return std::visit(
      [&](const auto& pay) {
        using T = std::decay_t<decltype(pay)>;
        pay.validate();
        std::vector<NamedStrategy> strategies;
        if constexpr (std::is_same_v<T, PDPayoffs>) {
          for (auto l : {StrategyLabel::C, StrategyLabel::D, StrategyLabel::Q})
            strategies.push_back(named_strategy(l));
        } else {
          for (auto l : {StrategyLabel::Swerve, StrategyLabel::Straight,
                         StrategyLabel::Q})
            strategies.push_back(named_strategy(l));
        }
        return extended_matrix(row_template(pay), col_template(pay),
                               strategies, g);
      },
      payoffs);
}

// Row-player 2x2 block, evaluated through the quantization engine.
inline StrategyBlock extract_block(const GamePayoffs& payoffs, BlockId id,
                                   const Entanglement& g) {
  if (game_kind_of(payoffs) != game_kind_of(id))
    throw ValidationError("block " + std::string(to_string(id)) +
                          " does not belong to the selected game");
  const auto labels = block_strategies(id);
  const std::array<NamedStrategy, 2> strategies{named_strategy(labels[0]),
                                                named_strategy(labels[1])};
  const BimatrixGame sub = std::visit(
      [&](const auto& pay) {
        pay.validate();
        return extended_matrix(row_template(pay), col_template(pay),
                               strategies, g);
      },
      payoffs);
  StrategyBlock block;
  block.labels = labels;
  block.block_id = id;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) block.row_payoffs[i][j] = sub.row_payoff(i, j);
  return block;
}

}  // namespace qising

#endif  // QISING_GAMES_HPP_
