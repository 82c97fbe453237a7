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

#include "sbsim/density_sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sbsim/kernels.hpp"

namespace sbsim {

namespace {

std::vector<cplx> row_major(const Matrix& m) {
  std::vector<cplx> out(static_cast<std::size_t>(m.size()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
  return out;
}

// The state is stored column-major, so the vector index is col * dim + row:
// row qubit q is bit (n - 1 - q) and column qubit q is bit (2n - 1 - q).
class Engine {
 public:
  explicit Engine(Matrix rho) : rho_(std::move(rho)) {
    n_ = 0;
    while ((Eigen::Index{1} << n_) < rho_.rows()) ++n_;
  }

  void apply_unitary(const Matrix& u, std::span<const unsigned> qs) {
    const auto m = row_major(u);
    const auto mc = row_major(u.conjugate());
    std::array<unsigned, 2> row{}, col{};
    for (std::size_t j = 0; j < qs.size(); ++j) {
      row[j] = n_ - 1 - qs[j];
      col[j] = 2 * n_ - 1 - qs[j];
    }
    const auto& k = kernels::active();
    k.apply_local(rho_.data(), 2 * n_, {std::span<const unsigned>(row.data(), qs.size()), m});
    k.apply_local(rho_.data(), 2 * n_, {std::span<const unsigned>(col.data(), qs.size()), mc});
  }

  void apply_superop(std::span<const cplx> s, std::span<const unsigned> qs) {
    std::array<unsigned, 4> bits{};
    const std::size_t k = qs.size();
    for (std::size_t j = 0; j < k; ++j) {
      bits[j] = n_ - 1 - qs[j];
      bits[k + j] = 2 * n_ - 1 - qs[j];
    }
    kernels::active().apply_local(rho_.data(), 2 * n_, {std::span<const unsigned>(bits.data(), 2 * k), s});
  }

  const Matrix& state() const { return rho_; }

 private:
  unsigned n_;
  Matrix rho_;
};

const std::vector<cplx>& reset_superop() {
  static const std::vector<cplx> s = [] {
    Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
    k0(0, 0) = 1.0;
    k1(0, 1) = 1.0;
    return row_major(QuantumChannel(1, {k0, k1}).superoperator());
  }();
  return s;
}

void check_state(const Matrix& m, double tol) {
  const double herm = hermiticity_defect(m);
  if (herm > tol) throw std::logic_error("simulate: state lost Hermiticity (" + std::to_string(herm) + ")");
  const double tr = std::abs(m.trace() - 1.0);
  if (tr > tol) throw std::logic_error("simulate: trace drifted by " + std::to_string(tr));
}

}  // namespace

SimulationResult simulate(const Circuit& c, const DensityMatrix& rho0, const SimOptions& options) {
  if (rho0.width() != c.width()) throw std::invalid_argument("simulate: state and circuit widths differ");
  if (!options.device_qubits.empty() && options.device_qubits.size() != c.width())
    throw std::invalid_argument("simulate: device map size mismatch");
  Engine engine(rho0.matrix());
  SimulationResult result;
  std::size_t barrier = 0;
  std::array<unsigned, 2> device{};

  for (const Gate& g : c.gates()) {
    const auto qs = g.qubits();
    switch (g.kind) {
      case GateKind::Barrier: {
        check_state(engine.state(), options.check_tolerance);
        DensityMatrix full(engine.state());
        const auto& plan = options.keep_per_barrier;
        if (plan.empty()) {
          result.snapshots.push_back(std::move(full));
        } else {
          const auto& keep = plan[std::min(barrier, plan.size() - 1)];
          result.snapshots.push_back(keep.empty() ? std::move(full) : partial_trace(full, keep));
        }
        ++barrier;
        continue;
      }
      case GateKind::Measure: continue;
      case GateKind::Reset: engine.apply_superop(reset_superop(), qs); continue;
      default: break;
    }
    if (options.noise && !is_native(g.kind))
      throw std::invalid_argument("simulate: noisy simulation needs native gates, got " +
                                  std::string(to_string(g.kind)));
    if (g.kind != GateKind::I) engine.apply_unitary(gate_unitary(g), qs);
    if (options.noise) {
      for (std::size_t j = 0; j < qs.size(); ++j)
        device[j] = options.device_qubits.empty() ? qs[j] : options.device_qubits[qs[j]];
      const GateNoise* n = options.noise->find(g.kind, std::span<const unsigned>(device.data(), qs.size()));
      if (n && !n->trivial) engine.apply_superop(n->superop, qs);
    }
  }
  check_state(engine.state(), options.check_tolerance);
  result.final_state = DensityMatrix(engine.state());
  return result;
}

std::vector<double> basis_probabilities(const DensityMatrix& rho) {
  std::vector<double> p(static_cast<std::size_t>(rho.dim()));
  double total = 0.0;
  for (Eigen::Index i = 0; i < rho.dim(); ++i) {
    p[static_cast<std::size_t>(i)] = std::max(0.0, rho.matrix()(i, i).real());
    total += p[static_cast<std::size_t>(i)];
  }
  if (!(total > 0)) throw std::invalid_argument("basis_probabilities: zero trace");
  for (double& x : p) x /= total;
  return p;
}

namespace {

unsigned width_of(std::size_t size) {
  unsigned w = 0;
  while ((std::size_t{1} << w) < size) ++w;
  if ((std::size_t{1} << w) != size) throw std::invalid_argument("distribution length is not a power of two");
  return w;
}

// v <- (M_0 (x) ... (x) M_{n-1}) v, qubit 0 the most significant bit.
void apply_per_qubit(std::vector<double>& v, std::span<const RealMatrix> ms) {
  const unsigned n = width_of(v.size());
  if (ms.size() != n) throw std::invalid_argument("confusion: one matrix per qubit required");
  for (unsigned q = 0; q < n; ++q) {
    const std::size_t bit = std::size_t{1} << (n - 1 - q);
    const RealMatrix& m = ms[q];
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i & bit) continue;
      const double a = v[i], b = v[i | bit];
      v[i] = m(0, 0) * a + m(0, 1) * b;
      v[i | bit] = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string bits_of(std::size_t index, unsigned width) {
  std::string s(width, '0');
  for (unsigned q = 0; q < width; ++q)
    if (index & (std::size_t{1} << (width - 1 - q))) s[q] = '1';
  return s;
}

}  // namespace

std::vector<double> apply_confusion(std::span<const double> probs, std::span<const RealMatrix> confusion) {
  std::vector<double> v(probs.begin(), probs.end());
  apply_per_qubit(v, confusion);
  return v;
}

CountsTable sample_counts(const DensityMatrix& rho, std::uint64_t shots, std::span<const RealMatrix> confusion,
                          std::uint64_t seed) {
  if (shots == 0) throw std::invalid_argument("sample_counts: need at least one shot");
  const unsigned n = rho.width();
  if (!confusion.empty() && confusion.size() != n)
    throw std::invalid_argument("sample_counts: one confusion matrix per qubit required");
  const auto p = basis_probabilities(rho);
  std::vector<double> cdf(p.size());
  std::partial_sum(p.begin(), p.end(), cdf.begin());

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> hist(p.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * cdf.back();
    auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    idx = std::min(idx, p.size() - 1);
    if (!confusion.empty()) {
      for (unsigned q = 0; q < n; ++q) {
        const std::size_t bit = std::size_t{1} << (n - 1 - q);
        const int truth = (idx & bit) ? 1 : 0;
        const bool read_one = uniform01(rng) < confusion[q](1, truth);
        idx = read_one ? (idx | bit) : (idx & ~bit);
      }
    }
    ++hist[idx];
  }
  CountsTable t;
  t.shots = shots;
  t.width = n;
  for (std::size_t i = 0; i < hist.size(); ++i)
    if (hist[i]) t.counts[bits_of(i, n)] = hist[i];
  return t;
}

std::vector<double> empirical_distribution(const CountsTable& counts) {
  std::vector<double> p(std::size_t{1} << counts.width, 0.0);
  std::uint64_t total = 0;
  for (const auto& [bits, n] : counts.counts) {
    if (bits.size() != counts.width) throw std::invalid_argument("counts: bit string width mismatch");
    std::size_t idx = 0;
    for (char c : bits) idx = (idx << 1) | (c == '1');
    p[idx] += static_cast<double>(n);
    total += n;
  }
  if (total != counts.shots) throw std::invalid_argument("counts: histogram does not sum to the shot count");
  for (double& x : p) x /= static_cast<double>(counts.shots);
  return p;
}

std::vector<double> project_to_simplex(std::span<const double> v) {
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cum = 0.0, tau = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    cum += u[k];
    const double t = (cum - 1.0) / static_cast<double>(k + 1);
    if (u[k] - t > 0) tau = t;
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(0.0, v[i] - tau);
  return out;
}

MitigatedDistribution mitigate_readout(std::span<const double> distribution, std::span<const RealMatrix> confusion) {
  std::vector<RealMatrix> inverses;
  for (const auto& m : confusion) {
    if (std::abs(m.determinant()) < 1e-12) throw std::invalid_argument("mitigate_readout: singular confusion matrix");
    inverses.push_back(m.inverse());
  }
  MitigatedDistribution out;
  out.quasi.assign(distribution.begin(), distribution.end());
  apply_per_qubit(out.quasi, inverses);
  out.projected = project_to_simplex(out.quasi);
  return out;
}

MitigatedDistribution mitigate_readout(const CountsTable& counts, std::span<const RealMatrix> confusion) {
  const auto p = empirical_distribution(counts);
  return mitigate_readout(p, confusion);
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

}  // namespace sbsim
