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

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/density_sim.hpp"
#include "sbsim/encoding.hpp"
#include "sbsim/lindblad.hpp"
#include "sbsim/noise.hpp"
#include "sbsim/params.hpp"
#include "sbsim/transpiler.hpp"

namespace sbsim {

inline constexpr std::string_view kVersion = "0.3.1";

enum class ExperimentKind {
  TrotterSweep,
  NoiseSweep,
  InfidelityVsTime,
  GammaSweep,
  Observables,
  Correlations,
  GateCounts,
};

std::string_view to_string(ExperimentKind k);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view s);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::TrotterSweep;
  ModelParams model;
  CodeKind code = CodeKind::Gray;
  std::vector<int> orders{1, 2};
  std::vector<double> dts{0.1, 0.2, 0.3, 0.4, 0.5};
  double t_final = 2.0;
  std::vector<double> xis{0.0};
  std::vector<double> gammas{0.0, 1.0};
  /// 0 selects exact expectation values.
  std::uint64_t shots = 0;
  std::uint64_t seed = 1;
  RateConvention convention = RateConvention::PaperCollision;
  std::filesystem::path out = "results.csv";
  /// Empty selects the bundled averaged Jakarta calibration.
  std::filesystem::path calibration;
  unsigned threads = 0;  // 0: hardware concurrency
  /// gate_counts grid.
  std::vector<unsigned> count_spins{1, 2};
  std::vector<unsigned> count_levels{4, 8};
  std::vector<CodeKind> count_codes{CodeKind::Gray, CodeKind::StandardBinary};

  /// Reference settings for `kind`.
  static ExperimentConfig defaults(ExperimentKind kind);

  std::vector<std::string> problems() const;
  void validate() const;

  static ExperimentConfig from_json(std::string_view text);
  /// Applies the keys present in `text` on top of `base`.
  static ExperimentConfig from_json(std::string_view text, ExperimentConfig base);
  std::string to_json() const;
  /// FNV-1a of the canonical JSON form, as 16 hex digits.
  std::string hash() const;
};

/// Steps needed to reach t_final: ceil(t_final / dt) with a 1e-9 slack, so
/// 2 / 0.3 gives 7 steps and t = 2.1.
unsigned step_count(double t_final, double dt);

struct PointSpec {
  int order = 2;
  double gamma = 1.0;
  double dt = 0.2;
  double xi = 0.0;
};

struct PointResult {
  PointSpec spec;
  unsigned n_steps = 0;
  std::vector<double> times;
  std::vector<DensityMatrix> sim;    // system register, one per time
  std::vector<DensityMatrix> exact;  // oracle, same grid
  /// Readout confusion of each system qubit at each time (device qubit the
  /// logical qubit sat on at that barrier), from the scaled calibration.
  std::vector<std::vector<RealMatrix>> readout;

  double average_infidelity() const;
  double final_infidelity() const;
  std::vector<double> infidelities() const;
};

/// Assemble -> transpile -> noisy simulate, and the oracle on the same grid.
/// Layouts, noise models and oracle trajectories are cached; run() is safe to
/// call from several threads.
class Pipeline {
 public:
  Pipeline(const ExperimentConfig& config, CalibrationData calibration);

  PointResult run(const PointSpec& point);

  /// Device layout used for circuits of `order` (chosen once per order).
  std::vector<unsigned> layout(int order);
  const CouplingMap& coupling() const { return coupling_; }

 private:
  ModelParams params_for(double gamma) const;
  std::shared_ptr<const NoiseModel> noise(double xi);
  std::shared_ptr<const std::vector<TrajectorySnapshot>> oracle(double gamma, double dt, unsigned n_steps);

  ExperimentConfig config_;
  CalibrationData calibration_;
  CouplingMap coupling_;
  std::mutex mutex_;
  std::map<int, std::vector<unsigned>> layouts_;
  std::map<double, std::shared_ptr<const NoiseModel>> noise_;
  std::map<std::tuple<double, double, unsigned>, std::shared_ptr<const std::vector<TrajectorySnapshot>>> oracles_;
};

/// Z-basis estimates (boson number, per-spin sigma_z, and C^ZZ for two spins)
/// from a distribution over system-register basis states.
struct ZBasisEstimate {
  double boson_number = 0.0;
  std::vector<double> sigma_z;
  double czz = 0.0;
};
ZBasisEstimate z_basis_estimate(std::span<const double> probs, const SpinBosonModel& model);

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Header plus one line per row; doubles as %.12g. Throws on NaN or on a row
/// whose length differs from the header.
std::string format_csv(const Table& t);
void emit_csv(const Table& t, const std::filesystem::path& path);

struct GateCountRow {
  unsigned n_spins = 1;
  unsigned levels = 4;
  int order = 1;
  CodeKind code = CodeKind::Gray;
  GateCount counts;
};

/// Native counts of one transpiled evolution step (Trotter step plus the
/// collisions) on the Jakarta map.
GateCountRow count_step_gates(unsigned n_spins, unsigned levels, int order, CodeKind code,
                              RateConvention convention = RateConvention::PaperCollision);

/// Runs the experiment, returning its table (rows ordered by grid index).
Table run_experiment(const ExperimentConfig& config);

/// run_experiment, then writes the CSV to config.out and a JSON manifest
/// next to it (same stem, ".manifest.json"). Returns the manifest path.
std::filesystem::path run_and_write(const ExperimentConfig& config);

}  // namespace sbsim
