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

#include "sbsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sbsim {

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("fidelity: dimension mismatch");
  // Trace norm of sqrt(rho) sqrt(sigma): singular values stay linear in
  // round-off where eigenvalues of sqrt(rho) sigma sqrt(rho) would not.
  const Matrix m = psd_sqrt(rho.matrix()) * psd_sqrt(sigma.matrix());
  const double root = Eigen::JacobiSVD<Matrix>(m).singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double infidelity(const DensityMatrix& rho, const DensityMatrix& sigma) { return 1.0 - fidelity(rho, sigma); }

double time_averaged_infidelity(std::span<const DensityMatrix> sim, std::span<const DensityMatrix> exact) {
  if (sim.size() != exact.size()) throw std::invalid_argument("time_averaged_infidelity: grid mismatch");
  if (sim.size() < 2) throw std::invalid_argument("time_averaged_infidelity: need at least one t > 0 point");
  double acc = 0.0;
  for (std::size_t k = 1; k < sim.size(); ++k) acc += infidelity(sim[k], exact[k]);
  return acc / static_cast<double>(sim.size() - 1);
}

namespace {

double trace_with(const DensityMatrix& rho, const PauliSum& op) {
  if (rho.width() != op.width()) throw std::invalid_argument("expectation: register width mismatch");
  return (rho.matrix() * to_dense(op)).trace().real();
}

PauliSum spin_operator(const SpinBosonModel& model, unsigned spin, Pauli letter, double sign) {
  const auto& spins = model.layout().spins;
  if (spin >= spins.size()) throw std::out_of_range("observable: spin index out of range");
  PauliString p(model.width(), sign);
  p.set(spins[spin], letter);
  PauliSum s(model.width());
  s.add(p);
  return s;
}

// Physical sigma_z is -Z on the spin qubit.
PauliSum sigma(const SpinBosonModel& model, unsigned spin, CorrelationPair which) {
  return which == CorrelationPair::ZZ ? spin_operator(model, spin, Pauli::Z, -1.0)
                                      : spin_operator(model, spin, Pauli::X, 1.0);
}

}  // namespace

double connected_correlation(const DensityMatrix& rho, const SpinBosonModel& model, CorrelationPair pair) {
  if (model.params().n_spins != 2) throw std::invalid_argument("connected_correlation: needs exactly two spins");
  const PauliSum a = sigma(model, 0, pair);
  const PauliSum b = sigma(model, 1, pair);
  return trace_with(rho, a * b) - trace_with(rho, a) * trace_with(rho, b);
}

double expectation(const DensityMatrix& rho, const SpinBosonModel& model, const ObservableSpec& obs) {
  switch (obs.kind) {
    case ObservableKind::BosonNumber: return trace_with(rho, model.number_operator());
    case ObservableKind::SigmaZ: return trace_with(rho, sigma(model, obs.spin, CorrelationPair::ZZ));
    case ObservableKind::SigmaX: return trace_with(rho, sigma(model, obs.spin, CorrelationPair::XX));
    case ObservableKind::Czz: return connected_correlation(rho, model, CorrelationPair::ZZ);
    case ObservableKind::Cxx: return connected_correlation(rho, model, CorrelationPair::XX);
  }
  return 0.0;
}

}  // namespace sbsim
