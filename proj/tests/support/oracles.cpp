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

#include "oracles.hpp"

#include <numbers>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

namespace sbsim::testing {

namespace {

Matrix pauli(char p) {
  Matrix m = Matrix::Zero(2, 2);
  switch (p) {
    case 'X': m(0, 1) = m(1, 0) = 1.0; break;
    case 'Y':
      m(0, 1) = -kI;
      m(1, 0) = kI;
      break;
    case 'Z':
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default: m = Matrix::Identity(2, 2);
  }
  return m;
}

Matrix rotation(char p, double angle) {
  const Matrix gen = (-kI * (angle / 2)) * pauli(p);
  return gen.exp();
}

}  // namespace

Matrix reference_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::I: return Matrix::Identity(2, 2);
    case GateKind::X: return pauli('X');
    case GateKind::SX: return std::exp(kI * (std::numbers::pi / 4)) * rotation('X', std::numbers::pi / 2);
    case GateKind::RZ: return rotation('Z', g.angle);
    case GateKind::RY: return rotation('Y', g.angle);
    case GateKind::CX: {
      Matrix m = Matrix::Zero(4, 4);
      m.topLeftCorner(2, 2) = Matrix::Identity(2, 2);
      m.bottomRightCorner(2, 2) = pauli('X');
      return m;
    }
    case GateKind::CRY: {
      Matrix m = Matrix::Zero(4, 4);
      m.topLeftCorner(2, 2) = Matrix::Identity(2, 2);
      m.bottomRightCorner(2, 2) = rotation('Y', g.angle);
      return m;
    }
    default: throw std::invalid_argument("reference_gate: not unitary");
  }
}

Matrix lift(const Matrix& local, std::span<const unsigned> qubits, unsigned width) {
  const std::size_t dim = std::size_t{1} << width;
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  auto local_index = [&](std::size_t idx) {
    std::size_t l = 0;
    for (unsigned q : qubits) l = (l << 1) | ((idx >> (width - 1 - q)) & 1u);
    return l;
  };
  std::size_t mask = 0;
  for (unsigned q : qubits) mask |= std::size_t{1} << (width - 1 - q);
  for (std::size_t row = 0; row < dim; ++row)
    for (std::size_t col = 0; col < dim; ++col) {
      if ((row & ~mask) != (col & ~mask)) continue;
      out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
          local(static_cast<Eigen::Index>(local_index(row)), static_cast<Eigen::Index>(local_index(col)));
    }
  return out;
}

Matrix circuit_unitary(const Circuit& c) {
  const auto dim = Eigen::Index{1} << c.width();
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::Barrier || g.kind == GateKind::Measure) continue;
    if (g.kind == GateKind::Reset) throw std::invalid_argument("circuit_unitary: reset is not unitary");
    u = lift(reference_gate(g), g.qubits(), c.width()) * u;
  }
  return u;
}

DenseRun run_dense(const Circuit& c, const Matrix& rho0) {
  DenseRun r;
  Matrix rho = rho0;
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k1(0, 1) = 1.0;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::Barrier: r.snapshots.push_back(rho); break;
      case GateKind::Measure: break;
      case GateKind::Reset: {
        const Matrix a = lift(k0, g.qubits(), c.width());
        const Matrix b = lift(k1, g.qubits(), c.width());
        rho = a * rho * a.adjoint() + b * rho * b.adjoint();
        break;
      }
      default: {
        const Matrix u = lift(reference_gate(g), g.qubits(), c.width());
        rho = u * rho * u.adjoint();
      }
    }
  }
  r.final_state = rho;
  return r;
}

Matrix reduce(const Matrix& rho, unsigned width, std::span<const unsigned> keep) {
  const std::size_t dim = std::size_t{1} << width;
  const std::size_t kd = std::size_t{1} << keep.size();
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(kd), static_cast<Eigen::Index>(kd));
  std::size_t kept_mask = 0;
  for (unsigned q : keep) kept_mask |= std::size_t{1} << (width - 1 - q);
  auto sub = [&](std::size_t idx) {
    std::size_t l = 0;
    for (unsigned q : keep) l = (l << 1) | ((idx >> (width - 1 - q)) & 1u);
    return l;
  };
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if ((i & ~kept_mask) == (j & ~kept_mask))
        out(static_cast<Eigen::Index>(sub(i)), static_cast<Eigen::Index>(sub(j))) +=
            rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return out;
}

Matrix liouvillian(const Matrix& h, const std::vector<JumpOperator>& jumps) {
  const Eigen::Index d = h.rows();
  const Matrix id = Matrix::Identity(d, d);
  Matrix l = -kI * (Matrix(Eigen::kroneckerProduct(id, h)) - Matrix(Eigen::kroneckerProduct(h.transpose(), id)));
  for (const auto& j : jumps) {
    const Matrix ldl = j.op.adjoint() * j.op;
    l += j.rate * (Matrix(Eigen::kroneckerProduct(j.op.conjugate(), j.op)) -
                   0.5 * Matrix(Eigen::kroneckerProduct(id, ldl)) -
                   0.5 * Matrix(Eigen::kroneckerProduct(ldl.transpose(), id)));
  }
  return l;
}

Matrix lindblad_exact(const Matrix& h, const std::vector<JumpOperator>& jumps, const Matrix& rho0, double t) {
  const Eigen::Index d = h.rows();
  const Matrix prop = (liouvillian(h, jumps) * t).exp();
  const Vector v = prop * Eigen::Map<const Vector>(rho0.data(), d * d);
  return Eigen::Map<const Matrix>(v.data(), d, d);
}

Matrix choi_of(const std::vector<Matrix>& kraus) {
  const Eigen::Index d = kraus.front().cols();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) {
      Matrix e = Matrix::Zero(d, d);
      e(i, j) = 1.0;
      Matrix out = Matrix::Zero(d, d);
      for (const auto& k : kraus) out += k * e * k.adjoint();
      c.block(i * d, j * d, d, d) = out;
    }
  return c;
}

std::vector<Matrix> amplitude_damping(double p) {
  Matrix k0 = Matrix::Zero(2, 2);
  Matrix k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k0(1, 1) = std::sqrt(1.0 - p);
  k1(0, 1) = std::sqrt(p);
  return {k0, k1};
}

Matrix ladder(unsigned d) {
  Matrix a = Matrix::Zero(d, d);
  for (unsigned n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix induced_choi(const Circuit& c, unsigned keep) {
  const unsigned w = c.width();
  Matrix choi = Matrix::Zero(4, 4);
  const unsigned keep_list[] = {keep};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix e = Matrix::Zero(2, 2);
      e(i, j) = 1.0;
      Matrix env = Matrix::Zero(2, 2);
      env(0, 0) = 1.0;
      // Build |0..0> on the others and e on `keep`.
      Matrix rho = Matrix::Identity(1, 1);
      for (unsigned q = 0; q < w; ++q) rho = Matrix(Eigen::kroneckerProduct(rho, q == keep ? e : env));
      const Matrix out = reduce(run_dense(c, rho).final_state, w, keep_list);
      choi.block(2 * i, 2 * j, 2, 2) = out;
    }
  return choi;
}

}  // namespace sbsim::testing
