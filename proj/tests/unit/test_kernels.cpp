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

#include <vector>

#include "generators.hpp"
#include "sbsim/kernels.hpp"

namespace sbsim {
namespace {

using kernels::cplx;
using testing::Gen;

std::vector<cplx> random_vector(Gen& g, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& x : v) x = g.complex_normal();
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// Dense reference: lift the local matrix by index arithmetic and multiply.
std::vector<cplx> dense_apply(const std::vector<cplx>& v, unsigned n_bits, const std::vector<unsigned>& bits,
                              const std::vector<cplx>& m) {
  const std::size_t dim = std::size_t{1} << n_bits;
  const std::size_t k = bits.size();
  std::size_t mask = 0;
  for (unsigned b : bits) mask |= std::size_t{1} << b;
  auto local = [&](std::size_t idx) {
    std::size_t l = 0;
    for (unsigned b : bits) l = (l << 1) | ((idx >> b) & 1u);
    return l;
  };
  std::vector<cplx> out(dim, 0.0);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if ((r & ~mask) == (c & ~mask)) out[r] += m[local(r) * (std::size_t{1} << k) + local(c)] * v[c];
  return out;
}

TEST(Kernels, DispatchReportsAnIsa) {
  const auto& t = kernels::active();
  EXPECT_NE(t.name, nullptr);
  EXPECT_EQ(kernels::isa_name(kernels::Isa::Scalar), "scalar");
  if (!kernels::avx2_available()) EXPECT_EQ(kernels::active_isa(), kernels::Isa::Scalar);
}

TEST(Kernels, ScalarApplyLocalMatchesDenseLift) {
  Gen g(11);
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned n = 1 + g.index(7);
    const unsigned k = 1 + g.index(std::min(n, 4u));
    const auto bits = g.distinct(k, n);
    auto m = random_vector(g, (std::size_t{1} << k) * (std::size_t{1} << k));
    auto v = random_vector(g, std::size_t{1} << n);
    const auto expect = dense_apply(v, n, bits, m);
    kernels::scalar::apply_local(v.data(), n, {bits, m});
    EXPECT_LT(max_diff(v, expect), 1e-12) << "n=" << n << " k=" << k;
  }
}

TEST(Kernels, ApplyLocalRejectsBadOperands) {
  std::vector<cplx> v(8);
  std::vector<cplx> m(4);
  const std::vector<unsigned> out_of_range{3};
  EXPECT_THROW(kernels::scalar::apply_local(v.data(), 3, {out_of_range, m}), std::invalid_argument);
  const std::vector<unsigned> twice{1, 1};
  std::vector<cplx> m4(16);
  EXPECT_THROW(kernels::scalar::apply_local(v.data(), 3, {twice, m4}), std::invalid_argument);
  const std::vector<unsigned> one{0};
  EXPECT_THROW(kernels::scalar::apply_local(v.data(), 3, {one, m4}), std::invalid_argument);
}

class Avx2Equivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available on this host";
  }
};

TEST_F(Avx2Equivalence, ApplyLocal) {
  const auto& s = kernels::table_for(kernels::Isa::Scalar);
  const auto& a = kernels::table_for(kernels::Isa::Avx2);
  Gen g(12);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + g.index(10);
    const unsigned k = 1 + g.index(std::min(n, 4u));
    const auto bits = g.distinct(k, n);
    const auto m = random_vector(g, (std::size_t{1} << k) * (std::size_t{1} << k));
    auto v1 = random_vector(g, std::size_t{1} << n);
    auto v2 = v1;
    s.apply_local(v1.data(), n, {bits, m});
    a.apply_local(v2.data(), n, {bits, m});
    EXPECT_LT(max_diff(v1, v2), 1e-12) << "n=" << n << " k=" << k;
  }
}

TEST_F(Avx2Equivalence, MatvecAllSizes) {
  const auto& s = kernels::table_for(kernels::Isa::Scalar);
  const auto& a = kernels::table_for(kernels::Isa::Avx2);
  Gen g(13);
  for (std::size_t n = 1; n <= 67; n += (n < 9 ? 1 : 11)) {
    const auto mat = random_vector(g, n * n);
    const auto x = random_vector(g, n);
    std::vector<cplx> y1(n), y2(n);
    s.matvec(mat.data(), x.data(), y1.data(), n);
    a.matvec(mat.data(), x.data(), y2.data(), n);
    EXPECT_LT(max_diff(y1, y2), 1e-11 * static_cast<double>(n)) << "n=" << n;
  }
}

TEST_F(Avx2Equivalence, AxpyAllSizes) {
  const auto& s = kernels::table_for(kernels::Isa::Scalar);
  const auto& a = kernels::table_for(kernels::Isa::Avx2);
  Gen g(14);
  for (std::size_t n = 0; n <= 33; ++n) {
    const auto x = random_vector(g, n);
    auto y1 = random_vector(g, n);
    auto y2 = y1;
    const cplx alpha = g.complex_normal();
    s.axpy(alpha, x.data(), y1.data(), n);
    a.axpy(alpha, x.data(), y2.data(), n);
    EXPECT_LT(max_diff(y1, y2), 1e-14) << "n=" << n;
  }
}

TEST(Kernels, MatvecMatchesEigen) {
  Gen g(15);
  const std::size_t n = 16;
  const auto mat = random_vector(g, n * n);
  const auto x = random_vector(g, n);
  std::vector<cplx> y(n);
  kernels::active().matvec(mat.data(), x.data(), y.data(), n);
  Eigen::Map<const Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(mat.data(), n, n);
  const Eigen::VectorXcd ref = m * Eigen::Map<const Eigen::VectorXcd>(x.data(), n);
  for (std::size_t i = 0; i < n; ++i) EXPECT_LT(std::abs(ref(i) - y[i]), 1e-12);
}

}  // namespace
}  // namespace sbsim
