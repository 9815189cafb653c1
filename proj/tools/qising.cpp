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

// Command-line front end: quantize, curve, transition, oracle.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "qising/commands.hpp"

namespace {

void add_game_options(CLI::App* sub, qising::RunConfig& cfg) {
  sub->add_option("--game", cfg.game, "pd or chicken")
      ->check(CLI::IsMember({"pd", "chicken"}));
  sub->add_option("--r", cfg.r, "reward (pd) / reputation (chicken)");
  sub->add_option("--t", cfg.t, "temptation (pd)");
  sub->add_option("--s", cfg.s, "sucker (pd) / injury cost (chicken)");
  sub->add_option("--p", cfg.p, "punishment (pd)");
  sub->add_flag("--gamma-degrees", cfg.degrees, "read angle inputs in degrees");
}

void add_block_option(CLI::App* sub, qising::RunConfig& cfg) {
  sub->add_option("--block", cfg.block,
                  "qvc, qvd, qvswerve, qvstraight, classical-pd, classical-chicken");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized 2x2 games mapped onto the 1-D Ising chain"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value file; command-line flags win");

  qising::RunConfig cfg;
  std::string output;

  auto* quantize = app.add_subcommand("quantize", "print the quantized 3x3 game and its pure equilibria");
  add_game_options(quantize, cfg);
  quantize->add_option("--gamma", cfg.gamma, "entanglement angle");

  auto* curve = app.add_subcommand("curve", "magnetization versus gamma as CSV");
  add_game_options(curve, cfg);
  add_block_option(curve, cfg);
  curve->add_option("--beta", cfg.betas, "inverse temperatures (repeatable)")
      ->delimiter(',');
  curve->add_option("--gamma-start", cfg.gamma_start);
  curve->add_option("--gamma-stop", cfg.gamma_stop);
  curve->add_option("--steps", cfg.steps, "grid points, endpoints included");
  curve->add_option("-o,--output", output, "write CSV here instead of stdout");

  auto* transition = app.add_subcommand("transition", "locate the sign change of the field");
  add_game_options(transition, cfg);
  add_block_option(transition, cfg);

  auto* oracle = app.add_subcommand("oracle", "compare exact, sampled and limiting magnetization");
  // --h is the field, so help is long-form only here.
  oracle->set_help_flag("--help", "print this help message and exit");
  oracle->add_option("--J", cfg.J, "coupling");
  oracle->add_option("--h", cfg.h, "field");
  oracle->add_option("--beta", cfg.beta, "inverse temperature");
  oracle->add_option("--N", cfg.N, "ring size");
  oracle->add_option("--sweeps", cfg.sweeps, "Metropolis sweeps including burn-in");
  oracle->add_option("--burn-in", cfg.burn_in, "Metropolis burn-in sweeps (default sweeps/10)");
  oracle->add_option("--seed", cfg.seed, "Metropolis seed");
  oracle->add_option("--methods", cfg.methods,
                     "subset of enumeration,transfer_matrix,metropolis,thermodynamic_limit")
      ->delimiter(',');
  oracle->add_option("-o,--output", output, "write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qising::kExitValidation;
  }

  std::ostringstream buffer;
  int code = qising::kExitOk;
  if (quantize->parsed()) code = qising::run_quantize(cfg, buffer, std::cerr);
  else if (curve->parsed()) code = qising::run_curve(cfg, buffer, std::cerr);
  else if (transition->parsed()) code = qising::run_transition(cfg, buffer, std::cerr);
  else if (oracle->parsed()) code = qising::run_oracle(cfg, buffer, std::cerr);

  if (output.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << output << "\n";
      return qising::kExitValidation;
    }
    file << buffer.str();
  }
  return code;
}
