// Copyright 2026 The QRSS Authors
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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "qrss/quantum/kernels.h"
#include "qrss/random.h"

namespace qrss::quantum::kernels {
namespace {

constexpr double kTol = 1e-12;

std::vector<Amplitude> random_vector(std::size_t n, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  std::vector<Amplitude> v(n);
  for (auto& a : v) a = {standard_normal(rng), standard_normal(rng)};
  return v;
}

// Sizes cover the vector body, odd tails and the one-element case.
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 16, 33, 128, 1024};

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    simd_ = avx2_table();
    if (simd_ == nullptr) GTEST_SKIP() << "no AVX2 on this CPU";
  }
  const KernelTable& ref_ = scalar_table();
  const KernelTable* simd_ = nullptr;
};

TEST_F(KernelEquivalence, NormSquared) {
  for (std::size_t n : kSizes) {
    const auto a = random_vector(n, n);
    const double want = ref_.norm_squared(a.data(), n);
    EXPECT_NEAR(simd_->norm_squared(a.data(), n), want, kTol * (1.0 + want)) << n;
  }
}

TEST_F(KernelEquivalence, AbsSquared) {
  for (std::size_t n : kSizes) {
    const auto a = random_vector(n, n + 100);
    std::vector<double> x(n), y(n);
    ref_.abs_squared(a.data(), x.data(), n);
    simd_->abs_squared(a.data(), y.data(), n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(x[i], y[i], kTol * (1.0 + x[i]));
  }
}

TEST_F(KernelEquivalence, SwapPairsIsExact) {
  for (std::size_t n : {2u, 4u, 8u, 64u, 1024u}) {
    for (std::uint64_t target = 1; target < n; target <<= 1) {
      for (std::uint64_t control : {std::uint64_t{0}, std::uint64_t{1}, n / 2}) {
        if (control == target) continue;
        auto a = random_vector(n, n * 31 + target);
        auto b = a;
        ref_.swap_pairs(a.data(), n, target, control);
        simd_->swap_pairs(b.data(), n, target, control);
        EXPECT_EQ(a, b) << n << " " << target << " " << control;
      }
    }
  }
}

TEST_F(KernelEquivalence, ProjectScaleIsExact) {
  for (std::size_t n : {2u, 8u, 128u}) {
    for (std::uint64_t mask : {std::uint64_t{1}, std::uint64_t{3}, n - 1}) {
      auto a = random_vector(n, n + mask);
      auto b = a;
      ref_.project_scale(a.data(), n, mask, mask & 1, 1.7);
      simd_->project_scale(b.data(), n, mask, mask & 1, 1.7);
      EXPECT_EQ(a, b);
    }
  }
}

TEST_F(KernelEquivalence, InnerProduct) {
  for (std::size_t n : kSizes) {
    const auto a = random_vector(n, 7 * n);
    const auto b = random_vector(n, 7 * n + 1);
    const Amplitude x = ref_.inner_product(a.data(), b.data(), n);
    const Amplitude y = simd_->inner_product(a.data(), b.data(), n);
    EXPECT_NEAR(std::abs(x - y), 0.0, kTol * (1.0 + std::abs(x))) << n;
  }
}

TEST(KernelDispatch, ScalarReference) {
  const auto a = std::vector<Amplitude>{{1, 2}, {3, -1}, {0, 0.5}};
  EXPECT_DOUBLE_EQ(scalar_table().norm_squared(a.data(), a.size()), 15.25);
  const auto ip = scalar_table().inner_product(a.data(), a.data(), a.size());
  EXPECT_DOUBLE_EQ(ip.real(), 15.25);
  EXPECT_DOUBLE_EQ(ip.imag(), 0.0);
}

TEST(KernelDispatch, ForceLevels) {
  const SimdLevel before = active_simd_level();
  set_simd_level(SimdLevel::Scalar);
  EXPECT_EQ(active_simd_level(), SimdLevel::Scalar);
  if (avx2_table() != nullptr) {
    set_simd_level(SimdLevel::Avx2);
    EXPECT_EQ(active_simd_level(), SimdLevel::Avx2);
  } else {
    EXPECT_THROW(set_simd_level(SimdLevel::Avx2), std::invalid_argument);
  }
  set_simd_level(before);
  EXPECT_EQ(to_string(SimdLevel::Scalar), "scalar");
  EXPECT_EQ(to_string(SimdLevel::Avx2), "avx2");
}

}  // namespace
}  // namespace qrss::quantum::kernels
