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

#include "sbsim/lindblad.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sbsim/kernels.hpp"
#include "sbsim/metrics.hpp"

namespace sbsim {

LindbladOracle::LindbladOracle(const Matrix& h, const std::vector<JumpOperator>& jumps) : dim_(h.rows()) {
  if (h.rows() != h.cols()) throw std::invalid_argument("LindbladOracle: Hamiltonian must be square");
  const Matrix id = Matrix::Identity(dim_, dim_);
  // vec(A rho B) = (B^T kron A) vec(rho)
  Matrix l = -kI * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& j : jumps) {
    if (j.op.rows() != dim_ || j.op.cols() != dim_) throw std::invalid_argument("LindbladOracle: jump size mismatch");
    if (j.rate < 0) throw std::invalid_argument("LindbladOracle: negative rate");
    if (j.rate == 0) continue;
    const Matrix ldl = j.op.adjoint() * j.op;
    l += j.rate * (kron(j.op.conjugate(), j.op) - 0.5 * kron(id, ldl) - 0.5 * kron(ldl.transpose(), id));
  }
  liouvillian_ = l;
}

LindbladOracle::LindbladOracle(const SpinBosonModel& model, RateConvention convention)
    : LindbladOracle(model.dense_hamiltonian(), model.lindblad_operators(convention)) {}

void LindbladOracle::derivative(const cplx* in, cplx* out) const {
  kernels::active().matvec(liouvillian_.data(), in, out, static_cast<std::size_t>(liouvillian_.rows()));
}

std::vector<double> uniform_grid(double dt, unsigned n_steps) {
  std::vector<double> g(n_steps + 1);
  for (unsigned k = 0; k <= n_steps; ++k) g[k] = dt * k;
  return g;
}

std::vector<TrajectorySnapshot> LindbladOracle::evolve_fixed(const DensityMatrix& rho0,
                                                             std::span<const double> t_grid,
                                                             double max_step) const {
  if (rho0.dim() != dim_) throw std::invalid_argument("LindbladOracle: state dimension mismatch");
  if (t_grid.empty() || t_grid.front() != 0.0) throw std::invalid_argument("LindbladOracle: grid must start at 0");
  if (!(max_step > 0)) throw std::invalid_argument("LindbladOracle: step must be positive");
  for (std::size_t k = 1; k < t_grid.size(); ++k)
    if (!(t_grid[k] > t_grid[k - 1])) throw std::invalid_argument("LindbladOracle: grid must be ascending");

  const auto n = static_cast<std::size_t>(dim_ * dim_);
  const auto& kt = kernels::active();
  Matrix rho = rho0.matrix();
  std::vector<cplx> k1(n), k2(n), k3(n), k4(n), tmp(n);
  std::vector<TrajectorySnapshot> out;
  out.reserve(t_grid.size());
  out.push_back({0.0, DensityMatrix(rho)});

  for (std::size_t seg = 1; seg < t_grid.size(); ++seg) {
    const double span = t_grid[seg] - t_grid[seg - 1];
    const auto steps = static_cast<long>(std::ceil(span / max_step - 1e-9));
    const double h = span / static_cast<double>(steps);
    for (long s = 0; s < steps; ++s) {
      cplx* v = rho.data();
      derivative(v, k1.data());
      std::copy(v, v + n, tmp.begin());
      kt.axpy(0.5 * h, k1.data(), tmp.data(), n);
      derivative(tmp.data(), k2.data());
      std::copy(v, v + n, tmp.begin());
      kt.axpy(0.5 * h, k2.data(), tmp.data(), n);
      derivative(tmp.data(), k3.data());
      std::copy(v, v + n, tmp.begin());
      kt.axpy(h, k3.data(), tmp.data(), n);
      derivative(tmp.data(), k4.data());
      kt.axpy(h / 6.0, k1.data(), v, n);
      kt.axpy(h / 3.0, k2.data(), v, n);
      kt.axpy(h / 3.0, k3.data(), v, n);
      kt.axpy(h / 6.0, k4.data(), v, n);

      const double herm = hermiticity_defect(rho);
      if (herm > 1e-8) throw std::runtime_error("oracle: Hermiticity drift " + std::to_string(herm));
      rho = (0.5 * (rho + rho.adjoint())).eval();
      const double tr = std::abs(rho.trace() - 1.0);
      if (tr > 1e-6) throw std::runtime_error("oracle: trace drift " + std::to_string(tr) + ", step too coarse");
    }
    out.push_back({t_grid[seg], DensityMatrix(rho)});
  }
  return out;
}

std::vector<TrajectorySnapshot> LindbladOracle::evolve(const DensityMatrix& rho0, std::span<const double> t_grid,
                                                       const OracleOptions& options) const {
  double h = options.max_step;
  auto coarse = evolve_fixed(rho0, t_grid, h);
  for (int k = 0; k < options.max_halvings; ++k) {
    h *= 0.5;
    auto fine = evolve_fixed(rho0, t_grid, h);
    const double change = infidelity(coarse.back().rho, fine.back().rho);
    if (change < options.refine_tolerance) return fine;
    coarse = std::move(fine);
  }
  throw std::runtime_error("oracle: step refinement did not converge");
}

}  // namespace sbsim
