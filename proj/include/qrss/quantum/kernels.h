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

// Inner loops of the state-vector simulator.
//
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The variant is chosen once at startup from CPUID and can be forced
// with set_simd_level() or the QRSS_SIMD environment variable
// ("scalar" | "avx2"). Variants must agree with the scalar reference to within
// floating-point reassociation (see tests/kernels_test.cpp).

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qrss::quantum::kernels {

using Amplitude = std::complex<double>;

enum class SimdLevel { Scalar, Avx2 };

std::string_view to_string(SimdLevel level);

struct KernelTable {
  SimdLevel level;
  // Sum of |a_i|^2.
  double (*norm_squared)(const Amplitude* a, std::size_t n);
  // out[i] = |a_i|^2.
  void (*abs_squared)(const Amplitude* a, double* out, std::size_t n);
  // For every index i with (i & target) == 0 and (i & control) == control,
  // swap a[i] and a[i | target]. X is control == 0; CNOT sets one control bit.
  void (*swap_pairs)(Amplitude* a, std::size_t n, std::uint64_t target,
                     std::uint64_t control);
  // a[i] *= scale if (i & mask) == value, else a[i] = 0.
  void (*project_scale)(Amplitude* a, std::size_t n, std::uint64_t mask,
                        std::uint64_t value, double scale);
  // sum conj(a_i) * b_i.
  Amplitude (*inner_product)(const Amplitude* a, const Amplitude* b,
                             std::size_t n);
};

const KernelTable& scalar_table();
/// nullptr when the build or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

SimdLevel detected_simd_level();
SimdLevel active_simd_level();
/// Throws std::invalid_argument if the level is not available here.
void set_simd_level(SimdLevel level);
const KernelTable& active();

inline double norm_squared(std::span<const Amplitude> a) {
  return active().norm_squared(a.data(), a.size());
}
inline void abs_squared(std::span<const Amplitude> a, std::span<double> out) {
  active().abs_squared(a.data(), out.data(), a.size());
}
inline void swap_pairs(std::span<Amplitude> a, std::uint64_t target,
                       std::uint64_t control) {
  active().swap_pairs(a.data(), a.size(), target, control);
}
inline void project_scale(std::span<Amplitude> a, std::uint64_t mask,
                          std::uint64_t value, double scale) {
  active().project_scale(a.data(), a.size(), mask, value, scale);
}
inline Amplitude inner_product(std::span<const Amplitude> a,
                               std::span<const Amplitude> b) {
  return active().inner_product(a.data(), b.data(), a.size());
}

}  // namespace qrss::quantum::kernels
