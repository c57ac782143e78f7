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

#include <utility>

#include "qrss/quantum/kernels.h"

namespace qrss::quantum::kernels {
namespace {

double norm_squared_scalar(const Amplitude* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

void abs_squared_scalar(const Amplitude* a, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(a[i]);
}

void swap_pairs_scalar(Amplitude* a, std::size_t n, std::uint64_t target,
                       std::uint64_t control) {
  for (std::size_t i = 0; i < n; ++i) {
    if ((i & target) == 0 && (i & control) == control) {
      std::swap(a[i], a[i | target]);
    }
  }
}

void project_scale_scalar(Amplitude* a, std::size_t n, std::uint64_t mask,
                          std::uint64_t value, double scale) {
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = (i & mask) == value ? a[i] * scale : Amplitude{};
  }
}

Amplitude inner_product_scalar(const Amplitude* a, const Amplitude* b,
                               std::size_t n) {
  Amplitude acc{};
  for (std::size_t i = 0; i < n; ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{
      SimdLevel::Scalar,    norm_squared_scalar,  abs_squared_scalar,
      swap_pairs_scalar,    project_scale_scalar, inner_product_scalar,
  };
  return table;
}

}  // namespace qrss::quantum::kernels
