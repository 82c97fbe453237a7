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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/noise.hpp"
#include "sbsim/state.hpp"

namespace sbsim {

struct SimOptions {
  /// Per-gate channels; nullptr for noiseless runs.
  const NoiseModel* noise = nullptr;
  /// Device qubit of each circuit qubit, for noise lookup. Identity if empty.
  std::vector<unsigned> device_qubits;
  /// Circuit qubits kept (in order) in the snapshot taken at barrier k. The
  /// last entry is reused for later barriers; an empty list keeps the whole
  /// register.
  std::vector<std::vector<unsigned>> keep_per_barrier;
  /// Tolerance of the trace/Hermiticity check made at every barrier.
  double check_tolerance = 1e-9;
};

struct SimulationResult {
  std::vector<DensityMatrix> snapshots;  // one per barrier
  DensityMatrix final_state;             // whole register
};

/// Runs `c` on `rho0`. Unitary gates conjugate the state; with a noise model
/// each gate is followed by its channel. Reset sends the qubit to |0>.
/// Measurements do not collapse the state (use sample_counts on the result).
/// Throws std::invalid_argument for non-native gates under noise and
/// std::logic_error if a snapshot violates the density-matrix invariants.
SimulationResult simulate(const Circuit& c, const DensityMatrix& rho0, const SimOptions& options = {});

/// Outcome histogram keyed by bit string, qubit 0 leftmost.
struct CountsTable {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t shots = 0;
  unsigned width = 0;
};

/// diag(rho) with negative round-off clipped and the sum renormalized.
std::vector<double> basis_probabilities(const DensityMatrix& rho);

/// Pushes a distribution through per-qubit confusion matrices M[read][true].
std::vector<double> apply_confusion(std::span<const double> probs, std::span<const RealMatrix> confusion);

/// Multinomial sampling of diag(rho) followed by independent per-qubit
/// readout flips (skipped if `confusion` is empty). Deterministic in `seed`.
CountsTable sample_counts(const DensityMatrix& rho, std::uint64_t shots, std::span<const RealMatrix> confusion,
                          std::uint64_t seed);

std::vector<double> empirical_distribution(const CountsTable& counts);

struct MitigatedDistribution {
  std::vector<double> quasi;      // inverse applied, may hold small negatives
  std::vector<double> projected;  // Euclidean projection onto the simplex
};

/// Applies the inverse of the tensor-product confusion matrix. Throws
/// std::invalid_argument if any factor is singular.
MitigatedDistribution mitigate_readout(std::span<const double> distribution, std::span<const RealMatrix> confusion);
MitigatedDistribution mitigate_readout(const CountsTable& counts, std::span<const RealMatrix> confusion);

/// Nearest probability vector in Euclidean norm.
std::vector<double> project_to_simplex(std::span<const double> v);

double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace sbsim
