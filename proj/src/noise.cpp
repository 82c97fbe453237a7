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

#include "sbsim/noise.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sbsim/log.hpp"
#include "sbsim/pauli.hpp"

namespace sbsim {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Calibration

std::vector<std::string> CalibrationData::problems() const {
  std::vector<std::string> out;
  auto prob = [](double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; };
  for (std::size_t q = 0; q < qubits.size(); ++q) {
    const auto& c = qubits[q];
    const std::string tag = "qubit " + std::to_string(q) + ": ";
    if (!(c.t1_us > 0)) out.push_back(tag + "T1 must be > 0");
    if (!(c.t2_us > 0)) out.push_back(tag + "T2 must be > 0");
    if (c.t2_us > 2 * c.t1_us) out.push_back(tag + "T2 must not exceed 2 T1");
    if (!prob(c.p10)) out.push_back(tag + "p10 must lie in [0, 1]");
    if (!prob(c.p01)) out.push_back(tag + "p01 must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const auto& g = gates[k];
    const std::string tag = "gate " + std::to_string(k) + " (" + std::string(to_string(g.kind)) + "): ";
    if (!is_native(g.kind) || !is_unitary(g.kind)) out.push_back(tag + "not a native unitary gate");
    else if (g.qubits.size() != arity(g.kind)) out.push_back(tag + "wrong operand count");
    for (unsigned q : g.qubits)
      if (q >= qubits.size()) out.push_back(tag + "qubit " + std::to_string(q) + " not calibrated");
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1]) out.push_back(tag + "repeated operand");
    if (!prob(g.error)) out.push_back(tag + "error must lie in [0, 1]");
    if (!(g.time_ns >= 0) || !std::isfinite(g.time_ns)) out.push_back(tag + "time must be >= 0");
  }
  return out;
}

void CalibrationData::validate() const {
  const auto p = problems();
  if (p.empty()) return;
  std::string msg = "invalid calibration:";
  for (const auto& s : p) msg += "\n  " + s;
  throw std::invalid_argument(msg);
}

const GateCalibration* CalibrationData::find(GateKind kind, std::span<const unsigned> qs) const {
  for (const auto& g : gates) {
    if (g.kind != kind || g.qubits.size() != qs.size()) continue;
    if (std::equal(qs.begin(), qs.end(), g.qubits.begin())) return &g;
    if (qs.size() == 2 && qs[0] == g.qubits[1] && qs[1] == g.qubits[0]) return &g;
  }
  return nullptr;
}

CalibrationData CalibrationData::from_json(std::string_view text) {
  CalibrationData cal;
  try {
    const json doc = json::parse(text);
    for (const auto& q : doc.at("qubits")) {
      QubitCalibration c;
      c.t1_us = q.at("t1_us").get<double>();
      c.t2_us = q.at("t2_us").get<double>();
      c.freq_ghz = q.value("freq_ghz", 0.0);
      c.p10 = q.at("p10").get<double>();
      c.p01 = q.at("p01").get<double>();
      cal.qubits.push_back(c);
    }
    for (const auto& g : doc.at("gates")) {
      GateCalibration c;
      const auto name = g.at("kind").get<std::string>();
      const auto kind = parse_gate_kind(name);
      if (!kind) throw std::invalid_argument("unknown gate kind '" + name + "'");
      c.kind = *kind;
      c.qubits = g.at("qubits").get<std::vector<unsigned>>();
      c.error = g.at("error").get<double>();
      c.time_ns = g.at("time_ns").get<double>();
      cal.gates.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("calibration JSON: ") + e.what());
  }
  cal.validate();
  return cal;
}

CalibrationData CalibrationData::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open calibration file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str());
}

std::string CalibrationData::to_json() const {
  json doc;
  doc["qubits"] = json::array();
  for (const auto& q : qubits)
    doc["qubits"].push_back({{"t1_us", q.t1_us}, {"t2_us", q.t2_us}, {"freq_ghz", q.freq_ghz}, {"p10", q.p10},
                             {"p01", q.p01}});
  doc["gates"] = json::array();
  for (const auto& g : gates)
    doc["gates"].push_back(
        {{"kind", std::string(to_string(g.kind))}, {"qubits", g.qubits}, {"error", g.error}, {"time_ns", g.time_ns}});
  return doc.dump(2);
}

std::filesystem::path bundled_calibration_path() {
  return std::filesystem::path(SBSIM_DATA_DIR) / "jakarta-avg.json";
}

CalibrationData scale_calibration(const CalibrationData& cal, double xi) {
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("scale_calibration: xi must lie in [0, 1]");
  CalibrationData out = cal;
  for (auto& q : out.qubits) {
    q.p10 *= xi;
    q.p01 *= xi;
  }
  for (auto& g : out.gates) {
    g.error *= xi;
    g.time_ns *= xi;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Channels

QuantumChannel::QuantumChannel(unsigned n_qubits, std::vector<Matrix> kraus) : n_(n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  for (auto& k : kraus) {
    if (k.rows() != d || k.cols() != d) throw std::invalid_argument("QuantumChannel: Kraus operator size mismatch");
    if (k.norm() > 1e-15) kraus_.push_back(std::move(k));
  }
  if (kraus_.empty()) throw std::invalid_argument("QuantumChannel: no Kraus operators");
}

QuantumChannel QuantumChannel::identity(unsigned n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return QuantumChannel(n_qubits, {Matrix::Identity(d, d)});
}

QuantumChannel QuantumChannel::unitary(const Matrix& u) {
  unsigned n = 0;
  while ((Eigen::Index{1} << n) < u.rows()) ++n;
  return QuantumChannel(n, {u});
}

QuantumChannel QuantumChannel::from_choi(const Matrix& choi, unsigned n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  if (choi.rows() != d * d || choi.cols() != d * d) throw std::invalid_argument("from_choi: size mismatch");
  Eigen::SelfAdjointEigenSolver<Matrix> es((choi + choi.adjoint()) * 0.5);
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda < -1e-10) throw std::invalid_argument("from_choi: Choi matrix is not positive semidefinite");
    if (lambda <= 0.0) continue;
    Matrix op(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index o = 0; o < d; ++o) op(o, i) = std::sqrt(lambda) * es.eigenvectors()(i * d + o, k);
    kraus.push_back(std::move(op));
  }
  return QuantumChannel(n_qubits, std::move(kraus));
}

Matrix QuantumChannel::choi() const {
  const Eigen::Index d = dim();
  Matrix c = Matrix::Zero(d * d, d * d);
  for (const auto& k : kraus_) {
    Vector v(d * d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index o = 0; o < d; ++o) v(i * d + o) = k(o, i);
    c += v * v.adjoint();
  }
  return c;
}

Matrix QuantumChannel::superoperator() const {
  const Eigen::Index d = dim();
  Matrix s = Matrix::Zero(d * d, d * d);
  for (const auto& k : kraus_) s += kron(k, k.conjugate());
  return s;
}

Matrix QuantumChannel::apply(const Matrix& rho) const {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

double QuantumChannel::cptp_defect() const {
  const Eigen::Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : kraus_) sum += k.adjoint() * k;
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

QuantumChannel QuantumChannel::then(const QuantumChannel& next) const {
  if (next.n_ != n_) throw std::invalid_argument("QuantumChannel::then: size mismatch");
  std::vector<Matrix> ks;
  for (const auto& b : next.kraus_)
    for (const auto& a : kraus_) ks.push_back(b * a);
  QuantumChannel out(n_, std::move(ks));
  const std::size_t d2 = std::size_t{dim()} * dim();
  return out.kraus_.size() > d2 ? from_choi(out.choi(), n_) : out;
}

QuantumChannel QuantumChannel::tensor(const QuantumChannel& other) const {
  std::vector<Matrix> ks;
  for (const auto& a : kraus_)
    for (const auto& b : other.kraus_) ks.push_back(kron(a, b));
  return QuantumChannel(n_ + other.n_, std::move(ks));
}

QuantumChannel thermal_relaxation_channel(double t1, double t2, double t, double excited_population) {
  if (!(t1 > 0) || !(t2 > 0)) throw std::invalid_argument("thermal relaxation: T1 and T2 must be positive");
  if (t2 > 2 * t1) throw std::invalid_argument("thermal relaxation: T2 > 2 T1 is unphysical");
  if (!(t >= 0)) throw std::invalid_argument("thermal relaxation: gate time must be >= 0");
  if (!(excited_population >= 0 && excited_population <= 1))
    throw std::invalid_argument("thermal relaxation: excited population must lie in [0, 1]");
  if (t == 0) return QuantumChannel::identity(1);

  const double p1 = excited_population;
  const double p_reset = -std::expm1(-t / t1);
  const double p_t2 = std::exp(-t / t2);

  if (t2 <= t1) {
    const double p_z = (1.0 - p_reset) * (-std::expm1(-t * (1.0 / t2 - 1.0 / t1))) / 2.0;
    const double p_r0 = (1.0 - p1) * p_reset;
    const double p_r1 = p1 * p_reset;
    const double p_i = 1.0 - p_z - p_reset;
    auto unit = [](int r, int c) {
      Matrix m = Matrix::Zero(2, 2);
      m(r, c) = 1.0;
      return m;
    };
    Matrix z = Matrix::Identity(2, 2);
    z(1, 1) = -1.0;
    return QuantumChannel(1, {std::sqrt(p_i) * Matrix::Identity(2, 2), std::sqrt(p_z) * z,
                              std::sqrt(p_r0) * unit(0, 0), std::sqrt(p_r0) * unit(0, 1),
                              std::sqrt(p_r1) * unit(1, 0), std::sqrt(p_r1) * unit(1, 1)});
  }
  // Choi matrix, index 2 * in + out.
  Matrix c = Matrix::Zero(4, 4);
  c(0, 0) = 1.0 - p1 * p_reset;
  c(1, 1) = p1 * p_reset;
  c(2, 2) = (1.0 - p1) * p_reset;
  c(3, 3) = 1.0 - (1.0 - p1) * p_reset;
  c(0, 3) = c(3, 0) = p_t2;
  return QuantumChannel::from_choi(c, 1);
}

QuantumChannel depolarizing_channel(double p, unsigned n_qubits) {
  const unsigned d = 1u << n_qubits;
  const double d2 = static_cast<double>(d) * d;
  if (!(p >= 0 && p <= d2 / (d2 - 1))) throw std::invalid_argument("depolarizing: probability out of range");
  std::vector<Matrix> ks;
  const std::size_t n_strings = std::size_t{1} << (2 * n_qubits);
  for (std::size_t code = 0; code < n_strings; ++code) {
    PauliString s(n_qubits);
    for (unsigned q = 0; q < n_qubits; ++q) s.set(q, static_cast<Pauli>((code >> (2 * (n_qubits - 1 - q))) & 3u));
    const double weight = code == 0 ? 1.0 - p + p / d2 : p / d2;
    ks.push_back(std::sqrt(weight) * to_dense(s));
  }
  return QuantumChannel(n_qubits, std::move(ks));
}

double process_fidelity(const QuantumChannel& ch, const Matrix& target) {
  const Eigen::Index d = ch.dim();
  if (target.rows() != d || target.cols() != d) throw std::invalid_argument("process_fidelity: dimension mismatch");
  Vector psi(d * d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index o = 0; o < d; ++o) psi(i * d + o) = target(o, i);
  psi /= std::sqrt(static_cast<double>(d));
  const Matrix c = ch.choi() / static_cast<double>(d);
  return (psi.adjoint() * c * psi)(0, 0).real();
}

double average_gate_fidelity(const QuantumChannel& ch, const Matrix& target) {
  if (!ch.is_cptp(1e-8)) throw std::invalid_argument("average_gate_fidelity: channel is not CPTP");
  const double d = ch.dim();
  return (d * process_fidelity(ch, target) + 1.0) / (d + 1.0);
}

DepolarizingSolution depolarizing_probability(double target_infidelity, const QuantumChannel& thermal, unsigned d) {
  const double f_t = average_gate_fidelity(thermal, Matrix::Identity(d, d));
  const double f_gate = 1.0 - target_infidelity;
  DepolarizingSolution s;
  const double den = d * f_t - 1.0;
  s.raw = den == 0.0 ? 0.0 : d * (f_t - f_gate) / den;
  s.p = std::clamp(s.raw, 0.0, 1.0);
  // Round-off around zero is not a model failure.
  if (std::abs(s.p - s.raw) < 1e-12) s.raw = s.p;
  s.clamped = s.p != s.raw;
  return s;
}

RealMatrix confusion_matrix(double p10, double p01) {
  RealMatrix m(2, 2);
  m << 1.0 - p10, p01, p10, 1.0 - p01;
  return m;
}

// ---------------------------------------------------------------------------
// Noise model

NoiseModel NoiseModel::build(const CalibrationData& cal, double xi) {
  cal.validate();
  NoiseModel m;
  m.xi_ = xi;
  m.scaled_ = scale_calibration(cal, xi);
  for (const auto& q : m.scaled_.qubits) m.confusion_.push_back(confusion_matrix(q.p10, q.p01));

  auto thermal = [&m](unsigned q, double time_ns) {
    const auto& c = m.scaled_.qubits[q];
    return thermal_relaxation_channel(c.t1_us, c.t2_us, time_ns * 1e-3);
  };
  auto add = [&m](GateNoise g) {
    const unsigned q0 = g.qubits[0];
    const unsigned q1 = g.qubits.size() > 1 ? g.qubits[1] : q0;
    m.index_[{g.kind, q0, q1}] = m.entries_.size();
    m.entries_.push_back(std::move(g));
  };

  for (const auto& g : m.scaled_.gates) {
    std::vector<std::vector<unsigned>> orders{g.qubits};
    if (g.qubits.size() == 2) orders.push_back({g.qubits[1], g.qubits[0]});
    for (const auto& qs : orders) {
      if (m.index_.count({g.kind, qs[0], qs.size() > 1 ? qs[1] : qs[0]})) continue;
      GateNoise n;
      n.kind = g.kind;
      n.qubits = qs;
      n.target_infidelity = g.error;
      QuantumChannel th = thermal(qs[0], g.time_ns);
      for (std::size_t j = 1; j < qs.size(); ++j) th = th.tensor(thermal(qs[j], g.time_ns));
      const unsigned d = th.dim();
      n.thermal_infidelity = 1.0 - average_gate_fidelity(th, Matrix::Identity(d, d));
      const auto dep = depolarizing_probability(g.error, th, d);
      n.depolarizing_p = dep.p;
      n.clamped = dep.clamped;
      if (dep.clamped) {
        std::string where = std::to_string(qs[0]);
        if (qs.size() > 1) where += "," + std::to_string(qs[1]);
        char buf[160];
        std::snprintf(buf, sizeof(buf), "depolarizing probability %.3g clamped to %.3g (thermal infidelity %.3g, gate infidelity %.3g)",
                      dep.raw, dep.p, n.thermal_infidelity, g.error);
        const std::string msg = std::string(to_string(g.kind)) + " on " + where + ": " + buf;
        m.warnings_.push_back(msg);
        log_warning(msg);
      }
      n.channel = dep.p > 0 ? th.then(depolarizing_channel(dep.p, th.n_qubits())) : th;
      const Matrix s = n.channel.superoperator();
      n.trivial = (s - Matrix::Identity(s.rows(), s.cols())).cwiseAbs().maxCoeff() == 0.0;
      n.superop.resize(static_cast<std::size_t>(s.size()));
      for (Eigen::Index r = 0; r < s.rows(); ++r)
        for (Eigen::Index c = 0; c < s.cols(); ++c) n.superop[static_cast<std::size_t>(r * s.cols() + c)] = s(r, c);
      add(std::move(n));
    }
  }
  return m;
}

const GateNoise* NoiseModel::find(GateKind kind, std::span<const unsigned> qs) const {
  if (qs.empty()) return nullptr;
  const auto it = index_.find({kind, qs[0], qs.size() > 1 ? qs[1] : qs[0]});
  return it == index_.end() ? nullptr : &entries_[it->second];
}

}  // namespace sbsim
