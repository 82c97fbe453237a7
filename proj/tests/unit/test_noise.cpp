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

#include "generators.hpp"
#include "oracles.hpp"
#include "sbsim/noise.hpp"

namespace sbsim {
namespace {

using testing::Gen;

// Closed-form T1/T2 decay of a qubit state at zero temperature.
Matrix relaxed(const Matrix& rho, double t1, double t2, double t) {
  Matrix out = rho;
  const double p1 = std::exp(-t / t1);
  out(1, 1) = rho(1, 1) * p1;
  out(0, 0) = 1.0 - out(1, 1);
  out(0, 1) = rho(0, 1) * std::exp(-t / t2);
  out(1, 0) = rho(1, 0) * std::exp(-t / t2);
  return out;
}

TEST(Thermal, MatchesClosedFormInBothRegimes) {
  Gen g(51);
  // T2 <= T1 (Kraus branch) and T1 < T2 <= 2 T1 (Choi branch).
  const std::pair<double, double> regimes[] = {{100.0, 40.0}, {100.0, 100.0}, {50.0, 80.0}, {50.0, 100.0}};
  for (auto [t1, t2] : regimes)
    for (double t : {0.0, 0.05, 1.0, 30.0}) {
      const QuantumChannel ch = thermal_relaxation_channel(t1, t2, t);
      EXPECT_TRUE(ch.is_cptp(1e-12)) << t1 << "," << t2;
      const Matrix rho = g.mixed_state(1).matrix();
      EXPECT_LT((ch.apply(rho) - relaxed(rho, t1, t2, t)).cwiseAbs().maxCoeff(), 1e-12) << t1 << "," << t2 << "," << t;
    }
}

TEST(Thermal, RejectsUnphysicalTimes) {
  EXPECT_THROW(thermal_relaxation_channel(10.0, 30.0, 1.0), std::invalid_argument);
  EXPECT_THROW(thermal_relaxation_channel(0.0, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(thermal_relaxation_channel(10.0, 5.0, -1.0), std::invalid_argument);
}

TEST(Depolarizing, AveragesToMaximallyMixed) {
  Gen g(52);
  for (unsigned n : {1u, 2u}) {
    const Eigen::Index d = Eigen::Index{1} << n;
    const QuantumChannel ch = depolarizing_channel(0.3, n);
    EXPECT_TRUE(ch.is_cptp(1e-12));
    const Matrix rho = g.mixed_state(n).matrix();
    const Matrix want = 0.7 * rho + 0.3 * Matrix::Identity(d, d) / static_cast<double>(d);
    EXPECT_LT((ch.apply(rho) - want).cwiseAbs().maxCoeff(), 1e-12);
    // Average gate fidelity of depolarizing(p) is 1 - p (d - 1) / d.
    EXPECT_NEAR(average_gate_fidelity(ch, Matrix::Identity(d, d)), 1.0 - 0.3 * (d - 1.0) / d, 1e-12);
  }
  EXPECT_THROW(depolarizing_channel(2.0, 1), std::invalid_argument);
}

TEST(Channel, ChoiRoundTripAndComposition) {
  Gen g(53);
  const QuantumChannel a = thermal_relaxation_channel(80.0, 60.0, 3.0);
  EXPECT_LT((a.choi() - testing::choi_of(a.kraus())).norm(), 1e-12);
  const QuantumChannel b = QuantumChannel::from_choi(a.choi(), 1);
  const Matrix rho = g.mixed_state(1).matrix();
  EXPECT_LT((a.apply(rho) - b.apply(rho)).norm(), 1e-12);
  const QuantumChannel u = QuantumChannel::unitary(g.unitary(2));
  const QuantumChannel c = a.then(u).then(depolarizing_channel(0.1, 1));
  EXPECT_LE(c.kraus().size(), 4u);
  const Matrix want = depolarizing_channel(0.1, 1).apply(u.apply(a.apply(rho)));
  EXPECT_LT((c.apply(rho) - want).norm(), 1e-12);
  Matrix bad = Matrix::Zero(4, 4);
  bad(0, 0) = -1.0;
  EXPECT_THROW(QuantumChannel::from_choi(bad, 1), std::invalid_argument);
}

TEST(Channel, SuperoperatorActsOnRowMajorVec) {
  Gen g(54);
  const QuantumChannel ch = thermal_relaxation_channel(80.0, 60.0, 5.0).tensor(depolarizing_channel(0.2, 1));
  const Matrix rho = g.mixed_state(2).matrix();
  const Matrix s = ch.superoperator();
  Vector v(16);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) v(r * 4 + c) = rho(r, c);
  const Vector out = s * v;
  const Matrix want = ch.apply(rho);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) EXPECT_NEAR(std::abs(out(r * 4 + c) - want(r, c)), 0.0, 1e-12);
}

TEST(Fidelity, AverageFromProcessFidelity) {
  Gen g(55);
  const Matrix u = g.unitary(2);
  EXPECT_NEAR(average_gate_fidelity(QuantumChannel::unitary(u), u), 1.0, 1e-12);
  // Haar-average oracle by sampling is too slow; use the closed form for an
  // orthogonal target: F_pro = 0 gives F_avg = 1 / (d + 1).
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = x(1, 0) = 1.0;
  EXPECT_NEAR(average_gate_fidelity(QuantumChannel::identity(1), x), 1.0 / 3.0, 1e-12);
}

TEST(Calibration, BundledFileLoads) {
  const CalibrationData cal = CalibrationData::load(bundled_calibration_path());
  EXPECT_EQ(cal.qubits.size(), 7u);
  const unsigned pair[] = {5, 3};
  const GateCalibration* cx = cal.find(GateKind::CX, pair);
  ASSERT_NE(cx, nullptr);
  EXPECT_DOUBLE_EQ(cx->error, 1.109e-2);
  EXPECT_DOUBLE_EQ(cal.qubits[0].t1_us, 139.01);
  const CalibrationData again = CalibrationData::from_json(cal.to_json());
  EXPECT_EQ(again.gates.size(), cal.gates.size());
}

TEST(Calibration, SchemaErrorsAreReported) {
  EXPECT_THROW(CalibrationData::from_json("{"), std::invalid_argument);
  EXPECT_THROW(CalibrationData::from_json(R"({"qubits": []})"), std::invalid_argument);
  const char* bad = R"({"qubits": [{"t1_us": 10, "t2_us": 50, "p10": 2, "p01": 0}],
                        "gates": [{"kind": "cx", "qubits": [0, 3], "error": 0.1, "time_ns": 1}]})";
  try {
    CalibrationData::from_json(bad);
    FAIL() << "expected a validation error";
  } catch (const std::invalid_argument& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("T2 must not exceed"), std::string::npos);
    EXPECT_NE(msg.find("p10"), std::string::npos);
    EXPECT_NE(msg.find("not calibrated"), std::string::npos);
  }
  EXPECT_THROW(CalibrationData::load("/nonexistent/cal.json"), std::runtime_error);
}

TEST(Calibration, ScalingByXi) {
  const CalibrationData cal = CalibrationData::load(bundled_calibration_path());
  const CalibrationData s = scale_calibration(cal, 0.1);
  EXPECT_DOUBLE_EQ(s.qubits[0].p10, cal.qubits[0].p10 * 0.1);
  EXPECT_DOUBLE_EQ(s.gates[0].time_ns, cal.gates[0].time_ns * 0.1);
  EXPECT_DOUBLE_EQ(s.qubits[0].t1_us, cal.qubits[0].t1_us);
  EXPECT_THROW(scale_calibration(cal, 1.5), std::invalid_argument);
}

TEST(NoiseModel, ComposedChannelHitsTargetFidelity) {
  const CalibrationData cal = CalibrationData::load(bundled_calibration_path());
  for (double xi : {0.01, 0.1, 1.0}) {
    const NoiseModel m = NoiseModel::build(cal, xi);
    EXPECT_TRUE(m.warnings().empty());
    for (const auto& e : m.entries()) {
      const Eigen::Index d = e.channel.dim();
      EXPECT_TRUE(e.channel.is_cptp(1e-10));
      EXPECT_NEAR(average_gate_fidelity(e.channel, Matrix::Identity(d, d)), 1.0 - e.target_infidelity, 1e-9);
    }
  }
}

TEST(NoiseModel, ThermalDominatedSingleQubitGates) {
  // Thermal relaxation carries most of each bundled gate error.
  const NoiseModel m = NoiseModel::build(CalibrationData::load(bundled_calibration_path()), 1.0);
  const unsigned q0[] = {0};
  const unsigned pair[] = {0, 1};
  const GateNoise* sx = m.find(GateKind::SX, q0);
  const GateNoise* cx = m.find(GateKind::CX, pair);
  ASSERT_TRUE(sx && cx);
  EXPECT_GT(sx->thermal_infidelity / (sx->target_infidelity - sx->thermal_infidelity), 10.0);
  EXPECT_GT(cx->thermal_infidelity / (cx->target_infidelity - cx->thermal_infidelity), 4.0);
  const unsigned rev[] = {1, 0};
  EXPECT_NE(m.find(GateKind::CX, rev), nullptr);
  EXPECT_TRUE(m.find(GateKind::RZ, q0)->trivial);
}

TEST(NoiseModel, ClampedWhenThermalExceedsTarget) {
  CalibrationData cal;
  cal.qubits.push_back({10.0, 5.0, 5.0, 0.0, 0.0});
  cal.gates.push_back({GateKind::SX, {0}, 1e-6, 1000.0});
  const NoiseModel m = NoiseModel::build(cal, 1.0);
  ASSERT_EQ(m.warnings().size(), 1u);
  EXPECT_TRUE(m.entries()[0].clamped);
  EXPECT_EQ(m.entries()[0].depolarizing_p, 0.0);
}

TEST(NoiseModel, ZeroXiIsNoiseless) {
  const NoiseModel m = NoiseModel::build(CalibrationData::load(bundled_calibration_path()), 0.0);
  for (const auto& e : m.entries()) EXPECT_TRUE(e.trivial);
  EXPECT_TRUE(m.confusion(0).isApprox(RealMatrix::Identity(2, 2)));
}

TEST(Readout, ConfusionColumnsAreStochastic) {
  const RealMatrix m = confusion_matrix(0.1, 0.2);
  EXPECT_DOUBLE_EQ(m(1, 0), 0.1);
  EXPECT_DOUBLE_EQ(m(0, 1), 0.2);
  EXPECT_DOUBLE_EQ(m.col(0).sum(), 1.0);
  EXPECT_DOUBLE_EQ(m.col(1).sum(), 1.0);
}

}  // namespace
}  // namespace sbsim
