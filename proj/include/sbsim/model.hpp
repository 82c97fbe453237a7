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
#include <vector>

#include "sbsim/encoding.hpp"
#include "sbsim/params.hpp"
#include "sbsim/state.hpp"

namespace sbsim {

/// Jump operator L with the rate multiplying (L rho L^† - {L^†L, rho}/2).
struct JumpOperator {
  Matrix op;
  double rate = 0.0;
};

/// The encoded spin-boson model: parameters, code and the one Hamiltonian
/// shared by the circuit builder and the exact oracle.
class SpinBosonModel {
 public:
  SpinBosonModel(const ModelParams& params, CodeKind code);

  const ModelParams& params() const { return params_; }
  CodeKind code() const { return code_; }
  const TruncationSpec& truncation() const { return truncation_; }
  const SystemLayout& layout() const { return layout_; }
  unsigned width() const { return layout_.width; }

  const PauliSum& hamiltonian() const { return hamiltonian_; }
  std::uint64_t hamiltonian_fingerprint() const { return fingerprint_; }
  /// Encoded a^†a on the full register.
  const PauliSum& number_operator() const { return number_; }

  Matrix dense_hamiltonian() const;
  std::vector<JumpOperator> lindblad_operators(RateConvention convention) const;
  DensityMatrix initial_state(const InitialStateSpec& spec) const;

  /// Qubit values (0/1) of the product basis state described by `spec`,
  /// indexed by system-register qubit.
  std::vector<int> initial_bits(const InitialStateSpec& spec) const;

 private:
  ModelParams params_;
  CodeKind code_;
  TruncationSpec truncation_;
  SystemLayout layout_;
  PauliSum hamiltonian_;
  PauliSum number_;
  std::uint64_t fingerprint_ = 0;
};

/// One spin up, the rest down, oscillator in level 0.
InitialStateSpec default_initial_state(unsigned n_spins);

}  // namespace sbsim
