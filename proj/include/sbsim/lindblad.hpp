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

#include "sbsim/model.hpp"
#include "sbsim/state.hpp"

namespace sbsim {

struct TrajectorySnapshot {
  double t = 0.0;
  DensityMatrix rho;
};

struct OracleOptions {
  double max_step = 1e-3;
  /// Stop halving once the final states of two successive step sizes have
  /// infidelity below this.
  double refine_tolerance = 1e-8;
  int max_halvings = 6;
};

/// Fixed-step RK4 integrator of
///   d rho/dt = -i[H, rho] + sum_k r_k (L_k rho L_k^† - {L_k^† L_k, rho}/2)
/// on the column-stacked density matrix. The Liouvillian is built once.
class LindbladOracle {
 public:
  LindbladOracle(const Matrix& hamiltonian, const std::vector<JumpOperator>& jumps);
  LindbladOracle(const SpinBosonModel& model, RateConvention convention);

  Eigen::Index dim() const { return dim_; }

  /// Snapshots at every grid time. The grid must be ascending and start at
  /// 0. Throws std::runtime_error on trace drift above 1e-6, Hermiticity
  /// drift above 1e-8, or if refinement does not converge.
  std::vector<TrajectorySnapshot> evolve(const DensityMatrix& rho0, std::span<const double> t_grid,
                                         const OracleOptions& options = {}) const;

  /// A single pass at a fixed internal step (no refinement).
  std::vector<TrajectorySnapshot> evolve_fixed(const DensityMatrix& rho0, std::span<const double> t_grid,
                                               double max_step) const;

  /// d vec(rho)/dt for a column-stacked density matrix.
  void derivative(const cplx* in, cplx* out) const;

 private:
  Eigen::Index dim_ = 0;
  Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> liouvillian_;
};

/// Grid 0, dt, 2 dt, ..., n_steps dt.
std::vector<double> uniform_grid(double dt, unsigned n_steps);

}  // namespace sbsim
