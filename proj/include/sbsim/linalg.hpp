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

#include <complex>
#include <cstddef>
#include <span>

#include <Eigen/Dense>

namespace sbsim {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Matrix2 = Eigen::Matrix2cd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr cplx kI{0.0, 1.0};

/// Kronecker product a ⊗ b (a is the leftmost tensor factor).
Matrix kron(const Matrix& a, const Matrix& b);

/// Relative eigenvalue floor below which psd_sqrt treats a direction as null.
inline constexpr double kPsdRankTolerance = 1e-14;

/// Hermitian square root; eigenvalues below kPsdRankTolerance times the
/// largest magnitude are set to zero.
Matrix psd_sqrt(const Matrix& m);

/// Largest |m - m^†| entry.
double hermiticity_defect(const Matrix& m);

/// True if a == phase * b for some unit-modulus phase, to `tol` in max-norm.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);

}  // namespace sbsim
