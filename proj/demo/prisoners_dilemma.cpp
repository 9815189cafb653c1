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

// Walks through the quantized Prisoner's Dilemma: the 3x3 game at a few
// entanglement levels and the population magnetization of Q against D.

#include <cstdio>
#include <numbers>

#include "qising/qising.hpp"

int main() {
  using namespace qising;
  const PDPayoffs pd{3, 5, 0, 1};

  for (double gamma : {0.0, std::numbers::pi / 4, std::numbers::pi / 2}) {
    const BimatrixGame game = quantized_game(pd, Entanglement(gamma));
    std::printf("gamma = %.4f\n", gamma);
    for (std::size_t i = 0; i < game.size(); ++i) {
      std::printf("  %s", game.label(i).c_str());
      for (std::size_t j = 0; j < game.size(); ++j)
        std::printf("  (%5.2f, %5.2f)", game.row_payoff(i, j) + 0.0, game.col_payoff(i, j) + 0.0);
      std::printf("\n");
    }
    std::printf("  pure equilibria:");
    for (const auto& cell : pure_nash(game))
      std::printf(" (%s,%s)", game.label(cell.row).c_str(), game.label(cell.col).c_str());
    std::printf("\n\n");
  }

  if (const auto g = phase_transition_gamma(pd, BlockId::QvD))
    std::printf("Q vs D majority flips at gamma = %.6f rad\n", *g);

  const auto grid = linspace(0, std::numbers::pi / 2, 7);
  for (const auto& s : curve(pd, BlockId::QvD, 2.0, grid).samples)
    std::printf("  gamma %.3f  J %+.3f  h %+.3f  m %+.4f\n", s.gamma, s.J, s.h, s.m);
  return 0;
}
