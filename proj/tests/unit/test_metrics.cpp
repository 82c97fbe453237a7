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

#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include "generators.hpp"
#include "oracles.hpp"
#include "sbsim/metrics.hpp"

namespace sbsim {
namespace {

using testing::Gen;

TEST(Fidelity, PureStateCrossCheck) {
  Gen g(71);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix psi = g.pure_state(3);
    const DensityMatrix sigma = g.mixed_state(3);
    const double overlap = (psi.matrix() * sigma.matrix()).trace().real();
    EXPECT_NEAR(fidelity(psi, sigma), overlap, 1e-10);
    EXPECT_NEAR(fidelity(sigma, psi), overlap, 1e-10);
  }
}

TEST(Fidelity, SymmetryAndUnitaryInvariance) {
  Gen g(72);
  for (int trial = 0; trial < 20; ++trial) {
    const DensityMatrix a = g.mixed_state(2);
    const DensityMatrix b = g.mixed_state(2);
    const double f = fidelity(a, b);
    EXPECT_NEAR(f, fidelity(b, a), 1e-10);
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
    const Matrix u = g.unitary(4);
    const DensityMatrix ua(Matrix(u * a.matrix() * u.adjoint()));
    const DensityMatrix ub(Matrix(u * b.matrix() * u.adjoint()));
    EXPECT_NEAR(fidelity(ua, ub), f, 1e-10);
  }
}

TEST(Fidelity, CommutingStatesUseClassicalFormula) {
  // For diagonal states F = (sum_i sqrt(p_i q_i))^2.
  const std::vector<double> p{0.5, 0.2, 0.2, 0.1};
  const std::vector<double> q{0.1, 0.4, 0.3, 0.2};
  Matrix a = Matrix::Zero(4, 4), b = Matrix::Zero(4, 4);
  double bc = 0.0;
  for (int i = 0; i < 4; ++i) {
    a(i, i) = p[i];
    b(i, i) = q[i];
    bc += std::sqrt(p[i] * q[i]);
  }
  EXPECT_NEAR(fidelity(DensityMatrix(a), DensityMatrix(b)), bc * bc, 1e-12);
  EXPECT_NEAR(infidelity(DensityMatrix(a), DensityMatrix(a)), 0.0, 1e-12);
  EXPECT_THROW(fidelity(DensityMatrix(1), DensityMatrix(2)), std::invalid_argument);
}

TEST(Fidelity, TimeAverageSkipsInitialPoint) {
  const DensityMatrix zero(1);
  const DensityMatrix one(Matrix(Matrix::Identity(2, 2) - zero.matrix()));
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  const std::vector<DensityMatrix> sim{one, mixed, zero};
  const std::vector<DensityMatrix> exact{zero, zero, zero};
  EXPECT_NEAR(time_averaged_infidelity(sim, exact), 0.25, 1e-12);
  const std::vector<DensityMatrix> single{mixed};
  const std::vector<DensityMatrix> single_exact{zero};
  EXPECT_THROW(time_averaged_infidelity(single, single_exact), std::invalid_argument);
  EXPECT_THROW(time_averaged_infidelity(sim, single_exact), std::invalid_argument);
}

TEST(Observables, InitialState) {
  const SpinBosonModel m(ModelParams{}, CodeKind::Gray);
  const DensityMatrix rho = m.initial_state(default_initial_state(1));
  EXPECT_NEAR(expectation(rho, m, {ObservableKind::BosonNumber, 0}), 0.0, 1e-15);
  EXPECT_NEAR(expectation(rho, m, {ObservableKind::SigmaZ, 0}), 1.0, 1e-15);
  EXPECT_NEAR(expectation(rho, m, {ObservableKind::SigmaX, 0}), 0.0, 1e-15);
  EXPECT_NEAR(expectation(DensityMatrix::maximally_mixed(3), m, {ObservableKind::SigmaZ, 0}), 0.0, 1e-15);
  EXPECT_NEAR(expectation(DensityMatrix::maximally_mixed(3), m, {ObservableKind::BosonNumber, 0}), 1.5, 1e-12);
}

TEST(Observables, BosonNumberOfExcitedLevel) {
  const SpinBosonModel m(ModelParams{}, CodeKind::Gray);
  InitialStateSpec s;
  s.boson_level = 3;
  EXPECT_NEAR(expectation(m.initial_state(s), m, {ObservableKind::BosonNumber, 0}), 3.0, 1e-12);
}

TEST(Correlations, ProductAndBellStates) {
  ModelParams p;
  p.n_spins = 2;
  p.levels = 2;
  const SpinBosonModel m(p, CodeKind::Gray);
  Gen g(73);
  // Product of random spin states with the oscillator in |0>.
  const Matrix s1 = g.mixed_state(1).matrix();
  const Matrix s2 = g.mixed_state(1).matrix();
  Matrix vac = Matrix::Zero(2, 2);
  vac(0, 0) = 1.0;
  const Matrix prod = Eigen::kroneckerProduct(s1, Matrix(Eigen::kroneckerProduct(vac, s2)));
  EXPECT_NEAR(connected_correlation(DensityMatrix(prod), m, CorrelationPair::ZZ), 0.0, 1e-10);
  EXPECT_NEAR(connected_correlation(DensityMatrix(prod), m, CorrelationPair::XX), 0.0, 1e-10);

  // (|up, down> + |down, up>) / sqrt(2) on [spin1, boson, spin2].
  Vector bell = Vector::Zero(8);
  bell(0b100) = bell(0b001) = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(connected_correlation(DensityMatrix::pure(bell), m, CorrelationPair::ZZ), -1.0, 1e-12);
  EXPECT_NEAR(connected_correlation(DensityMatrix::pure(bell), m, CorrelationPair::XX), 1.0, 1e-12);

  const SpinBosonModel one(ModelParams{}, CodeKind::Gray);
  EXPECT_THROW(connected_correlation(DensityMatrix(3), one, CorrelationPair::ZZ), std::invalid_argument);
}

TEST(States, PartialTraceMatchesOracle) {
  Gen g(74);
  const DensityMatrix rho = g.mixed_state(4);
  const std::vector<std::vector<unsigned>> keeps{{0}, {3, 1}, {2, 0, 3}};
  for (const auto& keep : keeps) {
    const Matrix want = testing::reduce(rho.matrix(), 4, keep);
    EXPECT_LT((partial_trace(rho, keep).matrix() - want).cwiseAbs().maxCoeff(), 1e-14);
  }
  const unsigned dup[] = {1, 1};
  EXPECT_THROW(partial_trace(rho, dup), std::invalid_argument);
}

TEST(States, ValidityChecks) {
  Gen g(75);
  EXPECT_NO_THROW(g.mixed_state(2).check());
  Matrix bad = Matrix::Zero(2, 2);
  bad(0, 0) = 1.5;
  bad(1, 1) = -0.5;
  EXPECT_THROW(DensityMatrix(bad).check(), std::logic_error);
  EXPECT_THROW(DensityMatrix(Matrix::Zero(3, 3)), std::invalid_argument);
  EXPECT_NEAR(DensityMatrix::maximally_mixed(2).purity(), 0.25, 1e-15);
  const int bits[] = {1, 0};
  EXPECT_DOUBLE_EQ(DensityMatrix::basis(bits).matrix()(2, 2).real(), 1.0);
}

TEST(States, TraceDistance) {
  const DensityMatrix zero(1);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(1);
  EXPECT_NEAR(trace_distance(zero, mixed), 0.5, 1e-12);
  EXPECT_NEAR(max_distance(zero, mixed), 0.5, 1e-12);
}

}  // namespace
}  // namespace sbsim
