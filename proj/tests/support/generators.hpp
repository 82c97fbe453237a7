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
#include <random>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/linalg.hpp"
#include "sbsim/pauli.hpp"
#include "sbsim/state.hpp"

namespace sbsim::testing {

/// Seeded source for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  unsigned index(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  bool coin() { return index(2) == 1; }
  std::mt19937_64& engine() { return rng_; }

  cplx complex_normal() { return {normal(), normal()}; }
  Vector vector(Eigen::Index n);
  /// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
  Matrix unitary(Eigen::Index n);
  Matrix hermitian(Eigen::Index n);
  DensityMatrix pure_state(unsigned width);
  /// Full-rank mixed state: normalized G G^†.
  DensityMatrix mixed_state(unsigned width);

  PauliString pauli_string(std::size_t width, bool allow_complex = false);
  PauliSum pauli_sum(std::size_t width, std::size_t terms, bool hermitian = true);

  /// Random circuit over the full gate set, optionally restricted to native gates.
  Circuit circuit(unsigned width, std::size_t n_gates, bool native_only = false, bool with_reset = false);
  /// Distinct qubits drawn without replacement.
  std::vector<unsigned> distinct(unsigned count, unsigned n);
  /// Random probability vector on the simplex.
  std::vector<double> distribution(std::size_t n);

 private:
  std::mt19937_64 rng_;
};

}  // namespace sbsim::testing
