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

#include "sbsim/model.hpp"
#include "sbsim/state.hpp"

namespace sbsim {

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
double infidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Mean infidelity over snapshot pairs 1..n-1 (index 0 is t = 0 and is
/// skipped). Throws if the lists differ in length or hold fewer than two
/// entries.
double time_averaged_infidelity(std::span<const DensityMatrix> sim, std::span<const DensityMatrix> exact);

enum class ObservableKind { BosonNumber, SigmaZ, SigmaX, Czz, Cxx };

struct ObservableSpec {
  ObservableKind kind = ObservableKind::BosonNumber;
  unsigned spin = 0;  // for SigmaZ / SigmaX
};

/// Tr(rho O) on the model's system register. sigma_z is the physical spin
/// operator (+1 for up).
double expectation(const DensityMatrix& rho, const SpinBosonModel& model, const ObservableSpec& obs);

enum class CorrelationPair { ZZ, XX };

/// <s1 s2> - <s1><s2> for spins 0 and 1.
double connected_correlation(const DensityMatrix& rho, const SpinBosonModel& model, CorrelationPair pair);

}  // namespace sbsim
