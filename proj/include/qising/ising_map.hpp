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

#ifndef QISING_ISING_MAP_HPP_
#define QISING_ISING_MAP_HPP_

// Maps a symmetric 2x2 strategy block onto a 1-D Ising chain and evaluates
// the thermodynamic-limit magnetization, i.e. the population's net
// preference for the block's first strategy.
//
// Adding a constant to each column of the row player's matrix leaves best
// responses unchanged. With lambda = -(a+c)/2 and mu = -(b+d)/2 the columns
// become antisymmetric and the matrix reads
//
//     J + h   -J + h
//    -J - h    J - h
//
// which fixes J = (a - c + d - b)/4 and h = (a - c + b - d)/4.

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "qising/errors.hpp"
#include "qising/games.hpp"

namespace qising {

struct IsingParams {
  double J = 0.0;     // nearest-neighbour coupling
  double h = 0.0;     // external field
  double beta = 0.0;  // inverse temperature

  void validate() const {
    if (!std::isfinite(J) || !std::isfinite(h))
      throw ValidationError("ising parameters J and h must be finite");
    if (!(beta >= 0.0) || !std::isfinite(beta))
      throw ValidationError("beta >= 0 violated");
  }
};

struct TransformedBlock {
  Matrix2x2 entries{};
  double lambda = 0.0;
  double mu = 0.0;
};

inline TransformedBlock transform(const StrategyBlock& block) {
  TransformedBlock out;
  out.lambda = -(block.a() + block.c()) / 2;
  out.mu = -(block.b() + block.d()) / 2;
  out.entries = {{{(block.a() - block.c()) / 2, (block.b() - block.d()) / 2},
                  {(block.c() - block.a()) / 2, (block.d() - block.b()) / 2}}};
  return out;
}

// The field is grouped as (a - d) + (b - c) so that blocks with equal
// diagonals and equal off-diagonals give h == 0 exactly.
inline IsingParams to_ising(const StrategyBlock& block, double beta) {
  IsingParams ip{((block.a() - block.c()) + (block.d() - block.b())) / 4,
                 ((block.a() - block.d()) + (block.b() - block.c())) / 4, beta};
  ip.validate();
  return ip;
}

// m = sinh(beta h) / sqrt(sinh^2(beta h) + exp(-4 beta J)), evaluated as
// sign(h) / sqrt(1 + exp(L)) with L = -4 beta J - 2 log|sinh(beta h)| so that
// neither sinh nor exp overflows for large arguments.
inline double magnetization(const IsingParams& ip) {
  ip.validate();
  const double x = ip.beta * ip.h;
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const double log_sinh =
      ax < 20.0 ? std::log(std::sinh(ax))
                : ax - std::numbers::ln2 + std::log1p(-std::exp(-2 * ax));
  const double l = -4 * ip.beta * ip.J - 2 * log_sinh;
  const double mag = l > 0 ? std::exp(-l / 2) / std::sqrt(1 + std::exp(-l))
                           : 1 / std::sqrt(1 + std::exp(l));
  return std::copysign(mag, x);
}

struct CurveSample {
  double gamma;
  double J;
  double h;
  double m;
};

struct MagnetizationCurve {
  std::vector<CurveSample> samples;
  BlockId block_id{};
  GamePayoffs payoffs;
  double beta = 0.0;
};

inline void validate_gamma_grid(std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("gamma grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    (void)Entanglement{grid[i]};
    if (i > 0 && !(grid[i] > grid[i - 1]))
      throw ValidationError("gamma grid must be strictly increasing");
  }
}

// `steps` evenly spaced points from start to stop inclusive.
inline std::vector<double> linspace(double start, double stop, std::size_t steps) {
  if (steps == 0) throw ValidationError("steps >= 1 violated");
  std::vector<double> out(steps);
  if (steps == 1) {
    out[0] = start;
    return out;
  }
  for (std::size_t i = 0; i < steps; ++i)
    out[i] = start + (stop - start) * static_cast<double>(i) /
                         static_cast<double>(steps - 1);
  out.back() = stop;
  return out;
}

inline MagnetizationCurve curve(const GamePayoffs& payoffs, BlockId id,
                                double beta, std::span<const double> gamma_grid) {
  validate_gamma_grid(gamma_grid);
  MagnetizationCurve out;
  out.block_id = id;
  out.payoffs = payoffs;
  out.beta = beta;
  out.samples.reserve(gamma_grid.size());
  for (double gamma : gamma_grid) {
    const StrategyBlock block = extract_block(payoffs, id, Entanglement{gamma});
    const IsingParams ip = to_ising(block, beta);
    out.samples.push_back({gamma, ip.J, ip.h, magnetization(ip)});
  }
  return out;
}

// Closed-form gamma where the field changes sign: cos 2g = (r-p)/(t-s) for
// PD Q-vs-D and cos 2g = s/(2r) for Chicken Q-vs-Straight. Other blocks
// have either h == 0 identically or no gamma dependence.
inline std::optional<double> phase_transition_gamma(const GamePayoffs& payoffs,
                                                    BlockId id) {
  if (game_kind_of(payoffs) != game_kind_of(id))
    throw ValidationError("block does not belong to the selected game");
  std::optional<double> arg;
  if (const auto* pd = std::get_if<PDPayoffs>(&payoffs)) {
    pd->validate();
    if (id == BlockId::QvD) arg = (pd->r - pd->p) / (pd->t - pd->s);
  } else {
    const auto& ch = std::get<ChickenPayoffs>(payoffs);
    ch.validate();
    if (id == BlockId::QvStraight) arg = ch.s / (2 * ch.r);
  }
  if (!arg || *arg > 1.0 || *arg < -1.0) return std::nullopt;
  return std::acos(*arg) / 2;
}

inline double field_at(const GamePayoffs& payoffs, BlockId id, double gamma) {
  return to_ising(extract_block(payoffs, id, Entanglement{gamma}), 1.0).h;
}

// Bisection on h(gamma) over [0, pi/2]. h is affine in cos 2g, so at most
// one sign change exists.
inline std::optional<double> phase_transition_bisection(const GamePayoffs& payoffs,
                                                        BlockId id,
                                                        double tol = 1e-10) {
  constexpr double kZeroField = 1e-12;
  double lo = 0.0;
  double hi = std::numbers::pi / 2;
  double h_lo = field_at(payoffs, id, lo);
  const double h_hi = field_at(payoffs, id, hi);
  if (std::abs(h_lo) <= kZeroField && std::abs(h_hi) <= kZeroField) return std::nullopt;
  if (h_lo == 0.0) return lo;
  if (h_hi == 0.0) return hi;
  if ((h_lo > 0) == (h_hi > 0)) return std::nullopt;
  while (hi - lo > tol) {
    const double mid = lo + (hi - lo) / 2;
    const double h_mid = field_at(payoffs, id, mid);
    if (h_mid == 0.0) return mid;
    if ((h_mid > 0) == (h_lo > 0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2;
}

}  // namespace qising

#endif  // QISING_ISING_MAP_HPP_
