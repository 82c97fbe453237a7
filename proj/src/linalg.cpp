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

#include "sbsim/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace sbsim {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix psd_sqrt(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  // Round-off eigenvalues would otherwise contribute their square roots.
  const double floor = kPsdRankTolerance * std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  const Eigen::VectorXd vals =
      es.eigenvalues().unaryExpr([floor](double v) { return v > floor ? std::sqrt(v) : 0.0; });
  return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

double hermiticity_defect(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  cplx phase = a(r, c) / b(r, c);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff() < tol;
}

}  // namespace sbsim
