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

// AVX2 variants. Functions carry a target attribute instead of the whole file
// being built with -mavx2, so no AVX2 code can leak into inline functions
// shared with the scalar translation units.

#include "qrss/quantum/kernels.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define QRSS_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace qrss::quantum::kernels {

#ifdef QRSS_HAVE_AVX2_KERNELS
namespace {

#define QRSS_AVX2 __attribute__((target("avx2,fma")))

// std::complex<double> is layout-compatible with double[2].
inline const double* as_doubles(const Amplitude* a) {
  return reinterpret_cast<const double*>(a);
}
inline double* as_doubles(Amplitude* a) { return reinterpret_cast<double*>(a); }

QRSS_AVX2 inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

QRSS_AVX2 double norm_squared_avx2(const Amplitude* a, std::size_t n) {
  const double* p = as_doubles(a);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256d v0 = _mm256_loadu_pd(p + i);
    const __m256d v1 = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(v0, v0, acc0);
    acc1 = _mm256_fmadd_pd(v1, v1, acc1);
  }
  for (; i + 4 <= m; i += 4) {
    const __m256d v = _mm256_loadu_pd(p + i);
    acc0 = _mm256_fmadd_pd(v, v, acc0);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < m; ++i) s += p[i] * p[i];
  return s;
}

QRSS_AVX2 void abs_squared_avx2(const Amplitude* a, double* out,
                                std::size_t n) {
  const double* p = as_doubles(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(p + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(p + 2 * i + 4);
    // hadd gives [|a0|^2, |a2|^2, |a1|^2, |a3|^2]; restore order.
    const __m256d h =
        _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
  }
  for (; i < n; ++i) out[i] = p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1];
}

QRSS_AVX2 void swap_pairs_avx2(Amplitude* a, std::size_t n,
                               std::uint64_t target, std::uint64_t control) {
  double* p = as_doubles(a);
  if (n >= 2 && ((target | control) & 1U) == 0) {
    // Two neighbouring amplitudes share every bit but bit 0, so they move
    // together as one 256-bit lane pair.
    for (std::size_t base = 0; base < n; base += 2 * target) {
      for (std::size_t off = 0; off < target; off += 2) {
        const std::size_t i = base + off;
        if ((i & control) != control) continue;
        const std::size_t j = i | target;
        const __m256d x = _mm256_loadu_pd(p + 2 * i);
        const __m256d y = _mm256_loadu_pd(p + 2 * j);
        _mm256_storeu_pd(p + 2 * i, y);
        _mm256_storeu_pd(p + 2 * j, x);
      }
    }
    return;
  }
  if (n >= 2 && target == 1 && (control & 1U) == 0) {
    for (std::size_t i = 0; i < n; i += 2) {
      if ((i & control) != control) continue;
      const __m256d v = _mm256_loadu_pd(p + 2 * i);
      _mm256_storeu_pd(p + 2 * i, _mm256_permute2f128_pd(v, v, 1));
    }
    return;
  }
  // Control on bit 0 splits neighbouring pairs; not worth a vector path.
  scalar_table().swap_pairs(a, n, target, control);
}

QRSS_AVX2 void project_scale_avx2(Amplitude* a, std::size_t n,
                                  std::uint64_t mask, std::uint64_t value,
                                  double scale) {
  double* p = as_doubles(a);
  const __m256d s = _mm256_set1_pd(scale);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const long long k0 = ((i & mask) == value) ? -1 : 0;
    const long long k1 = (((i + 1) & mask) == value) ? -1 : 0;
    const __m256d keep = _mm256_castsi256_pd(_mm256_set_epi64x(k1, k1, k0, k0));
    const __m256d v = _mm256_and_pd(_mm256_loadu_pd(p + 2 * i), keep);
    _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(v, s));
  }
  for (; i < n; ++i) a[i] = (i & mask) == value ? a[i] * scale : Amplitude{};
}

QRSS_AVX2 Amplitude inner_product_avx2(const Amplitude* a, const Amplitude* b,
                                       std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d acc_re = _mm256_setzero_pd();  // lanes: ar*br, ai*bi
  __m256d acc_im = _mm256_setzero_pd();  // lanes: ar*bi, ai*br
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc_re = _mm256_fmadd_pd(va, vb, acc_re);
    acc_im = _mm256_fmadd_pd(va, _mm256_permute_pd(vb, 0b0101), acc_im);
  }
  alignas(32) double re[4];
  alignas(32) double im[4];
  _mm256_store_pd(re, acc_re);
  _mm256_store_pd(im, acc_im);
  double sr = (re[0] + re[1]) + (re[2] + re[3]);
  double si = (im[0] - im[1]) + (im[2] - im[3]);
  for (; i < n; ++i) {
    sr += pa[2 * i] * pb[2 * i] + pa[2 * i + 1] * pb[2 * i + 1];
    si += pa[2 * i] * pb[2 * i + 1] - pa[2 * i + 1] * pb[2 * i];
  }
  return {sr, si};
}

#undef QRSS_AVX2

}  // namespace

const KernelTable* avx2_table() {
  static const bool supported =
      __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  static const KernelTable table{
      SimdLevel::Avx2,    norm_squared_avx2,  abs_squared_avx2,
      swap_pairs_avx2,    project_scale_avx2, inner_product_avx2,
  };
  return supported ? &table : nullptr;
}

#else

const KernelTable* avx2_table() { return nullptr; }

#endif

}  // namespace qrss::quantum::kernels
