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

#include "sbsim/state.hpp"

#include <stdexcept>
#include <string>

namespace sbsim {

namespace {

unsigned width_of(Eigen::Index dim) {
  unsigned w = 0;
  while ((Eigen::Index{1} << w) < dim) ++w;
  if ((Eigen::Index{1} << w) != dim) throw std::invalid_argument("DensityMatrix: dimension is not a power of two");
  return w;
}

}  // namespace

DensityMatrix::DensityMatrix(unsigned width) : width_(width) {
  const Eigen::Index d = Eigen::Index{1} << width;
  m_ = Matrix::Zero(d, d);
  m_(0, 0) = 1.0;
}

DensityMatrix::DensityMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("DensityMatrix: matrix must be square");
  width_ = width_of(m.rows());
  m_ = std::move(m);
}

DensityMatrix DensityMatrix::pure(const Vector& psi) {
  const double n = psi.norm();
  if (n == 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  const Vector u = psi / n;
  return DensityMatrix(Matrix(u * u.adjoint()));
}

DensityMatrix DensityMatrix::maximally_mixed(unsigned width) {
  const Eigen::Index d = Eigen::Index{1} << width;
  return DensityMatrix(Matrix(Matrix::Identity(d, d) / static_cast<double>(d)));
}

DensityMatrix DensityMatrix::basis(std::span<const int> bits) {
  const auto w = static_cast<unsigned>(bits.size());
  std::size_t index = 0;
  for (unsigned q = 0; q < w; ++q)
    if (bits[q]) index |= std::size_t{1} << (w - 1 - q);
  DensityMatrix rho(w);
  rho.m_(0, 0) = 0.0;
  rho.m_(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(index)) = 1.0;
  return rho;
}

double DensityMatrix::trace_defect() const { return std::abs(m_.trace() - 1.0); }

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  const Matrix h = (m_ + m_.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void DensityMatrix::check(double tol) const {
  const double herm = hermiticity_defect(m_);
  if (herm > tol) throw std::logic_error("density matrix not Hermitian: defect " + std::to_string(herm));
  const double tr = trace_defect();
  if (tr > tol) throw std::logic_error("density matrix trace off by " + std::to_string(tr));
  const double ev = min_eigenvalue();
  if (ev < -tol) throw std::logic_error("density matrix has eigenvalue " + std::to_string(ev));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const unsigned> keep) {
  const unsigned n = rho.width();
  std::vector<bool> kept(n, false);
  for (unsigned q : keep) {
    if (q >= n || kept[q]) throw std::invalid_argument("partial_trace: bad keep list");
    kept[q] = true;
  }
  std::vector<unsigned> traced;
  for (unsigned q = 0; q < n; ++q)
    if (!kept[q]) traced.push_back(q);

  const auto k = static_cast<unsigned>(keep.size());
  const auto t = static_cast<unsigned>(traced.size());
  auto spread = [n](std::size_t local, std::span<const unsigned> qubits) {
    std::size_t g = 0;
    const auto m = qubits.size();
    for (std::size_t j = 0; j < m; ++j)
      if (local & (std::size_t{1} << (m - 1 - j))) g |= std::size_t{1} << (n - 1 - qubits[j]);
    return g;
  };
  std::vector<std::size_t> keep_idx(std::size_t{1} << k), trace_idx(std::size_t{1} << t);
  for (std::size_t a = 0; a < keep_idx.size(); ++a) keep_idx[a] = spread(a, keep);
  for (std::size_t b = 0; b < trace_idx.size(); ++b) trace_idx[b] = spread(b, traced);

  const auto dk = static_cast<Eigen::Index>(keep_idx.size());
  Matrix out = Matrix::Zero(dk, dk);
  const Matrix& m = rho.matrix();
  for (Eigen::Index c = 0; c < dk; ++c)
    for (Eigen::Index r = 0; r < dk; ++r) {
      cplx acc = 0.0;
      for (std::size_t e : trace_idx)
        acc += m(static_cast<Eigen::Index>(keep_idx[r] | e), static_cast<Eigen::Index>(keep_idx[c] | e));
      out(r, c) = acc;
    }
  return DensityMatrix(std::move(out));
}

double max_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_distance: dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  const Matrix d = a.matrix() - b.matrix();
  Eigen::SelfAdjointEigenSolver<Matrix> es((d + d.adjoint()) * 0.5, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

}  // namespace sbsim
