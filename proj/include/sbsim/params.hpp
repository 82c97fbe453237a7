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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sbsim {

/// Spin-boson model parameters in units with hbar = h = 1.
struct ModelParams {
  double h = 1.0;        // z-field
  double epsilon = 0.5;  // x-field
  double omega = 4.0;    // oscillator frequency
  double lambda = 2.0;   // spin-oscillator coupling
  double gamma = 1.0;    // bare spin decay rate
  unsigned n_spins = 1;
  unsigned levels = 4;  // retained oscillator levels (d_HO)

  /// Throws std::invalid_argument listing every violated invariant.
  void validate() const;
  std::vector<std::string> problems() const;
};

/// How the bare rate gamma enters the dissipator.
///
/// PaperCollision: the collision angle arcsin(sqrt(1 - exp(-gamma dt))) is
/// exact, and the master equation uses gamma (L rho L^† - {L^†L, rho}/2),
/// so the excited population decays as exp(-gamma t).
/// Eq2Literal: the master equation keeps the factor 2 in front of
/// L rho L^†, the population decays as exp(-2 gamma t), and the collision
/// angle uses 2 gamma.
enum class RateConvention { PaperCollision, Eq2Literal };

/// Rate multiplying (L rho L^† - {L^†L, rho}/2).
double effective_rate(double gamma, RateConvention c);

std::string_view to_string(RateConvention c);
std::optional<RateConvention> parse_rate_convention(std::string_view s);

enum class SpinState { Down, Up };

struct InitialStateSpec {
  std::vector<SpinState> spins{SpinState::Up};
  unsigned boson_level = 0;
};

/// Qubit roles of the system register (spins + oscillator, no ancillas).
///
/// One spin: [boson msb .. boson lsb, spin].
/// Two or more spins: [spin 1, boson msb .. boson lsb, spin 2, spin 3, ...].
struct SystemLayout {
  unsigned width = 0;
  std::vector<unsigned> spins;
  std::vector<unsigned> boson;  // most significant code bit first

  static SystemLayout make(unsigned n_spins, unsigned boson_qubits);
};

}  // namespace sbsim
