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

#ifndef QISING_EQUILIBRIUM_HPP_
#define QISING_EQUILIBRIUM_HPP_

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qising/bimatrix.hpp"
#include "qising/errors.hpp"

namespace qising {

// Payoffs closer than this are treated as equal in best-response tests.
inline constexpr double kPayoffTolerance = 1e-9;

struct NashCell {
  std::size_t row;
  std::size_t col;
  // Some best response at this cell is not unique (weak equilibrium).
  bool tie = false;

  friend bool operator==(const NashCell& a, const NashCell& b) {
    return a.row == b.row && a.col == b.col;
  }
};

// All weak pure equilibria in row-major order.
inline std::vector<NashCell> pure_nash(const BimatrixGame& g,
                                       double tol = kPayoffTolerance) {
  const std::size_t n = g.size();
  std::vector<NashCell> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      bool best_row = true;
      bool best_col = true;
      bool tie = false;
      for (std::size_t k = 0; k < n && best_row; ++k) {
        if (k == i) continue;
        const double diff = g.row_payoff(k, j) - g.row_payoff(i, j);
        if (diff > tol) best_row = false;
        else if (diff >= -tol) tie = true;
      }
      for (std::size_t k = 0; k < n && best_row && best_col; ++k) {
        if (k == j) continue;
        const double diff = g.col_payoff(i, k) - g.col_payoff(i, j);
        if (diff > tol) best_col = false;
        else if (diff >= -tol) tie = true;
      }
      if (best_row && best_col) out.push_back({i, j, tie});
    }
  }
  return out;
}

// Symmetric mixed profile: both players put weight p on strategy 0.
struct MixedProfile {
  double p;
};

enum class MixedOutcome {
  Interior,      // unique indifference point strictly inside (0, 1)
  NoSolution,    // indifference point outside [0, 1]
  Boundary,      // indifference point at 0 or 1: a pure profile, not mixed
  Indifferent,   // row player indifferent for every p
};

struct MixedSolution {
  std::optional<MixedProfile> profile;
  MixedOutcome outcome = MixedOutcome::NoSolution;
  std::string note;
};

inline bool is_symmetric(const BimatrixGame& g, double tol = kPayoffTolerance) {
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      if (std::abs(g.col_payoff(i, j) - g.row_payoff(j, i)) > tol) return false;
  return true;
}

// Interior symmetric mixed equilibrium of a symmetric 2x2 game.
//
// With row payoffs a b / c d and the opponent on strategy 0 with weight p,
// indifference p*a + (1-p)*b = p*c + (1-p)*d gives p = (d - b) / (a - b - c + d).
inline MixedSolution mixed_nash_symmetric_2x2(const BimatrixGame& g,
                                              double tol = kPayoffTolerance) {
  if (g.size() != 2)
    throw DomainError("mixed_nash_symmetric_2x2 requires a 2x2 game");
  if (!is_symmetric(g, tol))
    throw DomainError("mixed_nash_symmetric_2x2 requires a symmetric game");
  const double a = g.row_payoff(0, 0);
  const double b = g.row_payoff(0, 1);
  const double c = g.row_payoff(1, 0);
  const double d = g.row_payoff(1, 1);
  const double denom = a - b - c + d;
  const double numer = d - b;
  MixedSolution out;
  if (std::abs(denom) <= tol) {
    if (std::abs(numer) <= tol) {
      out.outcome = MixedOutcome::Indifferent;
      out.note = "row player indifferent for every mixture";
    } else {
      out.outcome = MixedOutcome::NoSolution;
      out.note = "one strategy strictly dominates; no indifference point";
    }
    return out;
  }
  const double p = numer / denom;
  if (std::abs(p) <= tol || std::abs(p - 1.0) <= tol) {
    out.outcome = MixedOutcome::Boundary;
    out.note = "indifference point at p = " + std::string(p < 0.5 ? "0" : "1") +
               " (degenerate, coincides with a pure profile)";
  } else if (p < 0.0 || p > 1.0) {
    out.outcome = MixedOutcome::NoSolution;
    out.note = "indifference point outside [0, 1]";
  } else {
    out.outcome = MixedOutcome::Interior;
    out.profile = MixedProfile{p};
  }
  return out;
}

}  // namespace qising

#endif  // QISING_EQUILIBRIUM_HPP_
