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

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "sbsim/circuit.hpp"
#include "sbsim/linalg.hpp"

namespace sbsim {

struct QubitCalibration {
  double t1_us = 100.0;
  double t2_us = 100.0;
  double freq_ghz = 5.0;
  double p10 = 0.0;  // P(read 1 | prepared 0)
  double p01 = 0.0;  // P(read 0 | prepared 1)
};

struct GateCalibration {
  GateKind kind = GateKind::SX;
  std::vector<unsigned> qubits;
  double error = 0.0;  // average gate infidelity
  double time_ns = 0.0;
};

/// Device calibration. JSON schema:
///   {"qubits": [{"t1_us", "t2_us", "freq_ghz", "p10", "p01"}, ...],
///    "gates":  [{"kind", "qubits": [...], "error", "time_ns"}, ...]}
struct CalibrationData {
  std::vector<QubitCalibration> qubits;
  std::vector<GateCalibration> gates;

  std::vector<std::string> problems() const;
  void validate() const;
  /// Entry for `kind` on `qubits`; two-qubit entries match either operand
  /// order. nullptr if absent.
  const GateCalibration* find(GateKind kind, std::span<const unsigned> qubits) const;

  static CalibrationData from_json(std::string_view text);
  static CalibrationData load(const std::filesystem::path& path);
  std::string to_json() const;
};

/// Path of the bundled averaged ibmq_jakarta calibration.
std::filesystem::path bundled_calibration_path();

/// Gate error, gate time and readout flip probabilities scaled by xi; T1 and
/// T2 unchanged. Throws unless 0 <= xi <= 1.
CalibrationData scale_calibration(const CalibrationData& cal, double xi);

/// CPTP map on n qubits held as Kraus operators.
class QuantumChannel {
 public:
  QuantumChannel() = default;
  QuantumChannel(unsigned n_qubits, std::vector<Matrix> kraus);

  static QuantumChannel identity(unsigned n_qubits);
  static QuantumChannel unitary(const Matrix& u);
  /// From a Choi matrix indexed (input, output) with the input as the leading
  /// factor, C = sum_ij |i><j| (x) E(|i><j|). Eigenvalues below -1e-10 throw;
  /// the rest are floored at zero.
  static QuantumChannel from_choi(const Matrix& choi, unsigned n_qubits);

  unsigned n_qubits() const { return n_; }
  unsigned dim() const { return 1u << n_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  Matrix choi() const;
  /// S[(r', c'), (r, c)] = sum_K K[r', r] conj(K[c', c]), row-major.
  Matrix superoperator() const;
  Matrix apply(const Matrix& rho) const;

  /// max |sum K^† K - I|.
  double cptp_defect() const;
  bool is_cptp(double tol = 1e-10) const { return cptp_defect() <= tol; }

  /// `next` after this channel.
  QuantumChannel then(const QuantumChannel& next) const;
  /// this (x) other, this on the leading qubits.
  QuantumChannel tensor(const QuantumChannel& other) const;

 private:
  unsigned n_ = 0;
  std::vector<Matrix> kraus_;
};

/// Single-qubit thermal relaxation towards |excited_population| in |1>.
/// Kraus form for T2 <= T1, Choi form for T1 < T2 <= 2 T1; throws otherwise.
QuantumChannel thermal_relaxation_channel(double t1, double t2, double t_gate, double excited_population = 0.0);

/// rho -> (1 - p) rho + p Tr(rho) I / d.
QuantumChannel depolarizing_channel(double p, unsigned n_qubits);

/// <psi_U| C / d |psi_U> with psi_U the normalized vectorization of U.
double process_fidelity(const QuantumChannel& ch, const Matrix& target);
/// (d F_pro + 1) / (d + 1). Throws if the channel is not CPTP to 1e-8.
double average_gate_fidelity(const QuantumChannel& ch, const Matrix& target);

struct DepolarizingSolution {
  double p = 0.0;
  bool clamped = false;  // the raw solution fell outside [0, 1]
  double raw = 0.0;
};

/// p_D = d (F_T - F_gate) / (d F_T - 1), clamped to [0, 1].
DepolarizingSolution depolarizing_probability(double target_infidelity, const QuantumChannel& thermal, unsigned d);

/// 2x2 column-stochastic confusion matrix M[read][true].
RealMatrix confusion_matrix(double p10, double p01);

/// Channel attached to one gate instance.
struct GateNoise {
  GateKind kind = GateKind::I;
  std::vector<unsigned> qubits;  // device qubits
  QuantumChannel channel;
  std::vector<cplx> superop;  // row-major superoperator() for the kernels
  bool trivial = true;        // identity channel
  double target_infidelity = 0.0;
  double thermal_infidelity = 0.0;
  double depolarizing_p = 0.0;
  bool clamped = false;
};

/// Per-gate channels (depolarizing after thermal relaxation, thermal
/// relaxation tensored over the operands of a CX) and per-qubit readout
/// confusion matrices, for one noise factor.
class NoiseModel {
 public:
  static NoiseModel build(const CalibrationData& cal, double xi);

  double xi() const { return xi_; }
  const CalibrationData& calibration() const { return scaled_; }
  /// nullptr when the gate has no entry (treated as noiseless).
  const GateNoise* find(GateKind kind, std::span<const unsigned> device_qubits) const;
  const std::vector<GateNoise>& entries() const { return entries_; }
  const RealMatrix& confusion(unsigned device_qubit) const { return confusion_.at(device_qubit); }
  std::size_t n_qubits() const { return confusion_.size(); }
  /// Warnings raised while building (clamped depolarizing probabilities).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  double xi_ = 0.0;
  CalibrationData scaled_;
  std::vector<GateNoise> entries_;
  std::map<std::tuple<GateKind, unsigned, unsigned>, std::size_t> index_;
  std::vector<RealMatrix> confusion_;
  std::vector<std::string> warnings_;
};

}  // namespace sbsim
