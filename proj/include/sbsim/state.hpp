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

#include "sbsim/linalg.hpp"

namespace sbsim {

/// Density matrix on `width` qubits (qubit 0 is the most significant index
/// bit).
class DensityMatrix {
 public:
  DensityMatrix() = default;
  /// |0...0><0...0| on `width` qubits.
  explicit DensityMatrix(unsigned width);
  /// Takes ownership of a square 2^w x 2^w matrix; throws otherwise.
  explicit DensityMatrix(Matrix m);

  static DensityMatrix pure(const Vector& psi);
  static DensityMatrix maximally_mixed(unsigned width);
  /// Computational basis state with qubit 0 as the leftmost character.
  static DensityMatrix basis(std::span<const int> bits);

  unsigned width() const { return width_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Matrix& matrix() { return m_; }

  double trace_defect() const;
  double purity() const;
  /// Smallest eigenvalue of the Hermitian part.
  double min_eigenvalue() const;

  /// Throws std::logic_error if Hermiticity, trace or positivity are off by
  /// more than `tol`.
  void check(double tol = 1e-9) const;

 private:
  unsigned width_ = 0;
  Matrix m_;
};

/// Reduced state on `keep`, in the listed order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const unsigned> keep);

/// Trace distance max-norm style: largest entry of |a - b|.
double max_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace norm distance ||a - b||_1 / 2.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace sbsim
