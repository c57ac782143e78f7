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

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "qrss/quantum/kernels.h"

namespace qrss::quantum::kernels {
namespace {

const KernelTable* initial_table() {
  if (const char* env = std::getenv("QRSS_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &scalar_table();
    if (want == "avx2" && avx2_table() != nullptr) return avx2_table();
  }
  const KernelTable* best = avx2_table();
  return best != nullptr ? best : &scalar_table();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar: return "scalar";
    case SimdLevel::Avx2: return "avx2";
  }
  return "unknown";
}

SimdLevel detected_simd_level() {
  return avx2_table() != nullptr ? SimdLevel::Avx2 : SimdLevel::Scalar;
}

SimdLevel active_simd_level() { return active().level; }

void set_simd_level(SimdLevel level) {
  switch (level) {
    case SimdLevel::Scalar:
      current().store(&scalar_table());
      return;
    case SimdLevel::Avx2:
      if (avx2_table() == nullptr) {
        throw std::invalid_argument("AVX2 kernels are not available on this CPU");
      }
      current().store(avx2_table());
      return;
  }
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

}  // namespace qrss::quantum::kernels
