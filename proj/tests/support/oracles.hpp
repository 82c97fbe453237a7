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

#include <span>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/linalg.hpp"
#include "sbsim/model.hpp"
#include "sbsim/state.hpp"

namespace sbsim::testing {

/// Textbook 2x2 / 4x4 gate matrices, built from matrix exponentials.
Matrix reference_gate(const Gate& g);

/// Lifts a k-qubit matrix on `qubits` (first listed = most significant) to
/// the full register by explicit index arithmetic.
Matrix lift(const Matrix& local, std::span<const unsigned> qubits, unsigned width);

/// Product of all unitary gates; Barrier and Measure are skipped.
Matrix circuit_unitary(const Circuit& c);

/// Dense Kraus evolution of a circuit with resets; snapshots at barriers.
struct DenseRun {
  std::vector<Matrix> snapshots;
  Matrix final_state;
};
DenseRun run_dense(const Circuit& c, const Matrix& rho0);

/// Reduced state on `keep` (in the listed order) by direct summation.
Matrix reduce(const Matrix& rho, unsigned width, std::span<const unsigned> keep);

/// Column-stacked Lindblad generator.
Matrix liouvillian(const Matrix& h, const std::vector<JumpOperator>& jumps);

/// exp(L t) vec(rho0), reshaped.
Matrix lindblad_exact(const Matrix& h, const std::vector<JumpOperator>& jumps, const Matrix& rho0, double t);

/// Choi matrix sum_ij |i><j| (x) E(|i><j|) of a single-qubit channel given
/// by Kraus operators.
Matrix choi_of(const std::vector<Matrix>& kraus);

/// Amplitude damping with decay probability p.
std::vector<Matrix> amplitude_damping(double p);

/// Truncated ladder operator a on d levels.
Matrix ladder(unsigned d);

/// Channel induced on qubit `keep` by running `c` from |0> on the other
/// qubits and tracing them out; returned as its Choi matrix.
Matrix induced_choi(const Circuit& c, unsigned keep);

}  // namespace sbsim::testing
