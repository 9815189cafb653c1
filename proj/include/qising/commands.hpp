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

#ifndef QISING_COMMANDS_HPP_
#define QISING_COMMANDS_HPP_

// Subcommand bodies shared by the command-line tool and the test suites.
// Each run_* writes its primary output to `out`, diagnostics to `err`, and
// returns a process exit code.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qising/equilibrium.hpp"
#include "qising/errors.hpp"
#include "qising/games.hpp"
#include "qising/ising_map.hpp"
#include "qising/ising_oracle.hpp"

namespace qising {

enum ExitCode : int { kExitOk = 0, kExitValidation = 2, kExitConsistency = 3 };

// Tolerances above which `oracle` reports an internal inconsistency.
inline constexpr double kOracleExactTolerance = 1e-10;
inline constexpr double kOracleSampledSigmas = 5.0;
// Analytic and bisection transition angles must agree to this.
inline constexpr double kTransitionAgreement = 1e-9;

inline const std::vector<double>& default_betas() {
  static const std::vector<double> betas{0.5, 1.0, 2.0, 5.0};
  return betas;
}

struct RunConfig {
  std::string game = "pd";
  std::optional<double> r, t, s, p;
  std::optional<std::string> block;
  bool degrees = false;

  // quantize
  double gamma = std::numbers::pi / 2;
  // curve
  std::vector<double> betas = default_betas();
  double gamma_start = 0.0;
  double gamma_stop = std::numbers::pi / 2;
  std::size_t steps = 200;
  // oracle
  double J = 0.0;
  double h = 0.0;
  double beta = 1.0;
  int N = 16;
  std::uint64_t sweeps = 100000;
  std::optional<std::uint64_t> burn_in;
  std::uint64_t seed = 1;
  std::vector<std::string> methods{"enumeration", "transfer_matrix", "metropolis",
                                   "thermodynamic_limit"};
};

// Shortest text that reads back to the same double, at most 17 digits.
inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

inline double angle_input(const RunConfig& cfg, double value) {
  return cfg.degrees ? value * std::numbers::pi / 180.0 : value;
}

inline GamePayoffs payoffs_from(const RunConfig& cfg) {
  if (cfg.game == "pd") {
    PDPayoffs pd{cfg.r.value_or(3.0), cfg.t.value_or(5.0), cfg.s.value_or(0.0),
                 cfg.p.value_or(1.0)};
    pd.validate();
    return pd;
  }
  if (cfg.game == "chicken") {
    if (cfg.t || cfg.p)
      throw ValidationError("chicken takes only --r and --s");
    ChickenPayoffs ch{cfg.r.value_or(4.0), cfg.s.value_or(4.0)};
    ch.validate();
    return ch;
  }
  throw ValidationError("unknown game '" + cfg.game + "' (expected pd or chicken)");
}

inline BlockId parse_block(std::string_view name) {
  if (name == "qvc") return BlockId::QvC;
  if (name == "qvd") return BlockId::QvD;
  if (name == "qvswerve") return BlockId::QvSwerve;
  if (name == "qvstraight") return BlockId::QvStraight;
  if (name == "classical-pd") return BlockId::ClassicalPD;
  if (name == "classical-chicken") return BlockId::ClassicalChicken;
  throw ValidationError("unknown block '" + std::string(name) + "'");
}

inline BlockId block_from(const RunConfig& cfg, const GamePayoffs& payoffs) {
  const BlockId id = cfg.block ? parse_block(*cfg.block)
                     : game_kind_of(payoffs) == GameKind::PD ? BlockId::QvD
                                                             : BlockId::QvStraight;
  if (game_kind_of(id) != game_kind_of(payoffs))
    throw ValidationError("block " + std::string(to_string(id)) +
                          " does not belong to game " + cfg.game);
  return id;
}

inline void report_warning(const GamePayoffs& payoffs, std::ostream& err) {
  if (const auto* ch = std::get_if<ChickenPayoffs>(&payoffs))
    if (auto w = ch->validate()) err << "warning: " << *w << "\n";
}

namespace detail {

inline std::string payoff_cell(double v) {
  if (std::abs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

inline std::string describe(const GamePayoffs& payoffs) {
  std::ostringstream os;
  if (const auto* pd = std::get_if<PDPayoffs>(&payoffs))
    os << "pd (r=" << format_double(pd->r) << ", t=" << format_double(pd->t)
       << ", s=" << format_double(pd->s) << ", p=" << format_double(pd->p) << ")";
  else {
    const auto& ch = std::get<ChickenPayoffs>(payoffs);
    os << "chicken (r=" << format_double(ch.r) << ", s=" << format_double(ch.s)
       << ")";
  }
  return os.str();
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const ConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace detail

inline int run_quantize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const GamePayoffs payoffs = payoffs_from(cfg);
    const Entanglement g{angle_input(cfg, cfg.gamma)};
    report_warning(payoffs, err);
    const BimatrixGame game = quantized_game(payoffs, g);

    out << "game: " << detail::describe(payoffs) << "\n";
    out << "gamma: " << format_double(g.gamma()) << "\n";
    // Columns are sized to the widest cell plus a gap.
    std::vector<std::vector<std::string>> cells(game.size());
    std::size_t width = 10;
    for (std::size_t i = 0; i < game.size(); ++i)
      for (std::size_t j = 0; j < game.size(); ++j) {
        cells[i].push_back(detail::payoff_cell(game.row_payoff(i, j)) + ", " +
                           detail::payoff_cell(game.col_payoff(i, j)));
        width = std::max(width, cells[i].back().size() + 2);
      }
    const auto pad = [&out](const std::string& text, std::size_t w, bool left) {
      const std::string fill(w > text.size() ? w - text.size() : 0, ' ');
      out << (left ? text + fill : fill + text);
    };
    pad("", 10, true);
    for (const auto& l : game.labels()) pad(l, width, false);
    out << "\n";
    for (std::size_t i = 0; i < game.size(); ++i) {
      pad(game.label(i), 10, true);
      for (const auto& cell : cells[i]) pad(cell, width, false);
      out << "\n";
    }
    out << "pure_nash:";
    const auto equilibria = pure_nash(game);
    if (equilibria.empty()) out << " none";
    for (const auto& c : equilibria) {
      out << " (" << game.label(c.row) << "," << game.label(c.col) << ")";
      if (c.tie) out << "[weak]";
    }
    out << "\n";
    return kExitOk;
  });
}

inline int run_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const GamePayoffs payoffs = payoffs_from(cfg);
    const BlockId id = block_from(cfg, payoffs);
    if (cfg.betas.empty()) throw ValidationError("at least one beta is required");
    for (double b : cfg.betas) IsingParams{0.0, 0.0, b}.validate();
    const std::vector<double> grid =
        linspace(angle_input(cfg, cfg.gamma_start), angle_input(cfg, cfg.gamma_stop),
                 cfg.steps);
    validate_gamma_grid(grid);
    report_warning(payoffs, err);

    std::vector<MagnetizationCurve> curves;
    curves.reserve(cfg.betas.size());
    for (double b : cfg.betas) curves.push_back(curve(payoffs, id, b, grid));

    std::string text = "gamma,beta,J,h,m\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
      for (const auto& c : curves) {
        const auto& s = c.samples[i];
        text += format_double(s.gamma) + ',' + format_double(c.beta) + ',' +
                format_double(s.J) + ',' + format_double(s.h) + ',' +
                format_double(s.m) + '\n';
      }
    out << text;
    return kExitOk;
  });
}

inline int run_transition(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const GamePayoffs payoffs = payoffs_from(cfg);
    const BlockId id = block_from(cfg, payoffs);
    report_warning(payoffs, err);
    const auto analytic = phase_transition_gamma(payoffs, id);
    const auto numeric = phase_transition_bisection(payoffs, id);

    out << "game: " << detail::describe(payoffs) << "\n";
    out << "block: " << to_string(id) << "\n";
    out << "analytic_gamma: " << (analytic ? format_double(*analytic) : "none") << "\n";
    out << "bisection_gamma: " << (numeric ? format_double(*numeric) : "none") << "\n";
    if (analytic.has_value() != numeric.has_value()) {
      out << "difference: n/a\n";
      err << "internal error: analytic and bisection disagree on existence\n";
      return static_cast<int>(kExitConsistency);
    }
    if (!analytic) {
      out << "difference: none\n";
      return static_cast<int>(kExitOk);
    }
    const double diff = std::abs(*analytic - *numeric);
    out << "difference: " << format_double(diff) << "\n";
    if (diff > kTransitionAgreement) {
      err << "internal error: transition angles differ by " << format_double(diff)
          << "\n";
      return static_cast<int>(kExitConsistency);
    }
    return static_cast<int>(kExitOk);
  });
}

inline int run_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, [&] {
    const ChainSpec spec{cfg.N, IsingParams{cfg.J, cfg.h, cfg.beta}};
    spec.validate();
    bool want[4] = {false, false, false, false};
    static constexpr std::array<std::string_view, 4> kNames{
        "enumeration", "transfer_matrix", "metropolis", "thermodynamic_limit"};
    for (const auto& m : cfg.methods) {
      bool known = false;
      for (std::size_t i = 0; i < kNames.size(); ++i)
        if (m == kNames[i]) want[i] = known = true;
      if (!known) throw ValidationError("unknown oracle method '" + m + "'");
    }
    if (want[0] && spec.N > kMaxEnumerationSites)
      throw ResourceError("exact enumeration limited to N <= " +
                          std::to_string(kMaxEnumerationSites));
    const std::uint64_t burn_in = cfg.burn_in.value_or(cfg.sweeps / 10);
    if (want[2] && !(cfg.sweeps > burn_in))
      throw ValidationError("sweeps > burn_in violated");

    std::optional<double> exact_enum, exact_tm;
    std::optional<SampledEstimate> sampled;
    std::string text = "N,method,m,std_error\n";
    const auto row = [&](std::string_view method, double m, double se) {
      text += std::to_string(spec.N) + ',' + std::string(method) + ',' +
              format_double(m) + ',' + format_double(se) + '\n';
    };
    if (want[0]) row(kNames[0], *(exact_enum = enumerate_magnetization(spec)), 0.0);
    if (want[1]) row(kNames[1], *(exact_tm = transfer_matrix_finite(spec)), 0.0);
    if (want[2]) {
      sampled = metropolis_magnetization(spec, cfg.sweeps, burn_in, cfg.seed);
      row(kNames[2], sampled->mean, sampled->std_error);
      err << "metropolis: rng=" << sampled->rng << " seed=" << sampled->seed
          << " samples=" << sampled->samples << " burn_in=" << burn_in << "\n";
    }
    if (want[3]) row(kNames[3], magnetization(spec.ip), 0.0);
    out << text;

    if (exact_enum && exact_tm &&
        std::abs(*exact_enum - *exact_tm) > kOracleExactTolerance) {
      err << "internal error: enumeration and transfer matrix differ by "
          << format_double(std::abs(*exact_enum - *exact_tm)) << "\n";
      return static_cast<int>(kExitConsistency);
    }
    const std::optional<double> reference = exact_tm ? exact_tm : exact_enum;
    if (sampled && reference &&
        std::abs(sampled->mean - *reference) >
            kOracleSampledSigmas * sampled->std_error + 1e-12) {
      err << "internal error: metropolis estimate outside "
          << format_double(kOracleSampledSigmas) << " standard errors\n";
      return static_cast<int>(kExitConsistency);
    }
    return static_cast<int>(kExitOk);
  });
}

}  // namespace qising

#endif  // QISING_COMMANDS_HPP_
