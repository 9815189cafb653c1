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

#ifndef QISING_BIMATRIX_HPP_
#define QISING_BIMATRIX_HPP_

#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qising/errors.hpp"

namespace qising {

// Finite two-player normal-form game with the same n strategies for both
// players. Cell (i, j) is row strategy i against column strategy j.
class BimatrixGame {
 public:
  BimatrixGame(std::vector<std::string> labels,
               std::vector<std::pair<double, double>> cells)
      : labels_(std::move(labels)), cells_(std::move(cells)) {
    const std::size_t n = labels_.size();
    if (n < 2) throw ValidationError("bimatrix game needs at least 2 strategies");
    if (cells_.size() != n * n)
      throw ValidationError("bimatrix game: cell count must be n*n");
    for (const auto& [r, c] : cells_)
      if (!std::isfinite(r) || !std::isfinite(c))
        throw ValidationError("bimatrix game: payoffs must be finite");
  }

  // Symmetric game from the row player's matrix: column payoff of (i, j)
  // is the row payoff of (j, i).
  template <std::size_t N>
  static BimatrixGame symmetric(
      std::vector<std::string> labels,
      const std::array<std::array<double, N>, N>& row) {
    std::vector<std::pair<double, double>> cells;
    cells.reserve(N * N);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) cells.emplace_back(row[i][j], row[j][i]);
    return BimatrixGame(std::move(labels), std::move(cells));
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  double row_payoff(std::size_t i, std::size_t j) const {
    return cells_.at(i * size() + j).first;
  }
  double col_payoff(std::size_t i, std::size_t j) const {
    return cells_.at(i * size() + j).second;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::pair<double, double>> cells_;
};

}  // namespace qising

#endif  // QISING_BIMATRIX_HPP_
