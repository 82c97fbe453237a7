// Copyright 2026 The sbsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line runner: one subcommand per experiment kind.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sbsim/experiment.hpp"
#include "sbsim/log.hpp"

namespace {

struct Overrides {
  std::string config;
  std::vector<double> xis, dts, gammas;
  std::vector<int> orders;
  std::string convention, code, out, calibration;
  std::optional<std::uint64_t> shots, seed;
  std::optional<unsigned> threads, spins, levels;
  std::optional<double> t_final;
};

void add_flags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON experiment configuration")->check(CLI::ExistingFile);
  cmd->add_option("--xi", o.xis, "noise factors")->delimiter(',');
  cmd->add_option("--dt", o.dts, "Trotter steps")->delimiter(',');
  cmd->add_option("--order", o.orders, "Trotter orders (1, 2)")->delimiter(',');
  cmd->add_option("--gamma", o.gammas, "decay rates")->delimiter(',');
  cmd->add_option("--convention", o.convention, "rate convention")
      ->check(CLI::IsMember({"paper-collision", "eq2-literal"}));
  cmd->add_option("--code", o.code, "boson code")->check(CLI::IsMember({"gray", "binary"}));
  cmd->add_option("--shots", o.shots, "shots per snapshot (0: exact expectations)");
  cmd->add_option("--seed", o.seed, "sampling seed");
  cmd->add_option("--out", o.out, "CSV output path");
  cmd->add_option("--calibration", o.calibration, "device calibration JSON")->check(CLI::ExistingFile);
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  cmd->add_option("--spins", o.spins, "number of spins");
  cmd->add_option("--levels", o.levels, "retained oscillator levels");
  cmd->add_option("--t-final", o.t_final, "final time");
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

sbsim::ExperimentConfig resolve(sbsim::ExperimentKind kind, const Overrides& o) {
  auto c = sbsim::ExperimentConfig::defaults(kind);
  if (!o.config.empty()) {
    c = sbsim::ExperimentConfig::from_json(slurp(o.config), c);
    if (c.kind != kind)
      throw std::invalid_argument("config file describes '" + std::string(sbsim::to_string(c.kind)) +
                                  "', subcommand is '" + std::string(sbsim::to_string(kind)) + "'");
  }
  if (!o.xis.empty()) c.xis = o.xis;
  if (!o.dts.empty()) c.dts = o.dts;
  if (!o.gammas.empty()) c.gammas = o.gammas;
  if (!o.orders.empty()) c.orders = o.orders;
  if (!o.convention.empty()) c.convention = *sbsim::parse_rate_convention(o.convention);
  if (!o.code.empty()) {
    c.code = *sbsim::parse_code_kind(o.code);
    if (kind == sbsim::ExperimentKind::GateCounts) c.count_codes = {c.code};
  }
  if (o.shots) c.shots = *o.shots;
  if (o.seed) c.seed = *o.seed;
  if (!o.out.empty()) c.out = o.out;
  if (!o.calibration.empty()) c.calibration = o.calibration;
  if (o.threads) c.threads = *o.threads;
  if (o.spins) {
    c.model.n_spins = *o.spins;
    c.count_spins = {*o.spins};
  }
  if (o.levels) {
    c.model.levels = *o.levels;
    c.count_levels = {*o.levels};
  }
  if (o.t_final) c.t_final = *o.t_final;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Open spin-boson dynamics on an emulated noisy device"};
  app.set_version_flag("--version", std::string(sbsim::kVersion));
  app.require_subcommand(1);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "log progress");

  constexpr std::pair<sbsim::ExperimentKind, const char*> kinds[] = {
      {sbsim::ExperimentKind::TrotterSweep, "averaged infidelity over Trotter step, order and gamma"},
      {sbsim::ExperimentKind::NoiseSweep, "averaged and final infidelity over noise factor"},
      {sbsim::ExperimentKind::InfidelityVsTime, "infidelity at every step"},
      {sbsim::ExperimentKind::GammaSweep, "averaged infidelity over decay rate"},
      {sbsim::ExperimentKind::Observables, "boson number, sigma_z and sigma_x against the exact solution"},
      {sbsim::ExperimentKind::Correlations, "two-spin connected correlations C_zz and C_xx"},
      {sbsim::ExperimentKind::GateCounts, "native gates per transpiled step"}};
  Overrides overrides;
  std::vector<std::pair<CLI::App*, sbsim::ExperimentKind>> commands;
  for (auto [kind, about] : kinds) {
    auto* cmd = app.add_subcommand(std::string(sbsim::to_string(kind)), about);
    add_flags(cmd, overrides);
    commands.emplace_back(cmd, kind);
  }

  CLI11_PARSE(app, argc, argv);
  if (verbose) sbsim::set_log_level(sbsim::LogLevel::Info);

  try {
    for (auto [cmd, kind] : commands) {
      if (!cmd->parsed()) continue;
      const auto config = resolve(kind, overrides);
      const auto manifest = sbsim::run_and_write(config);
      std::cout << config.out.string() << '\n' << manifest.string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "sbsim: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
