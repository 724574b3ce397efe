// Copyright 2026 The ntruhe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2. Nothing in here may run unless dispatch.cpp has
// confirmed CPU support.

#include <immintrin.h>

#include <vector>

#include "kernels_internal.hpp"

namespace ntruhe::kernels {
namespace {

// out[k] = sum_i a[i] * b[(k - i) mod n]. With bb = b || b this is
// sum_i a[i] * bb[n + k - i], so four consecutive k read four consecutive bb
// entries for a fixed i. _mm256_mul_epi32 multiplies the signed low 32 bits
// of each 64-bit lane, which is exact because |a|, |b| < 2^31.
void convolve_avx2(std::span<const std::int64_t> a,
                   std::span<const std::int64_t> b,
                   std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  std::vector<std::int64_t> bb(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    bb[j] = b[j];
    bb[j + n] = b[j];
  }

  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
      const __m256i a0 = _mm256_set1_epi64x(a[i]);
      const __m256i a1 = _mm256_set1_epi64x(a[i + 1]);
      const __m256i b0 = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(bb.data() + n + k - i));
      const __m256i b1 = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(bb.data() + n + k - i - 1));
      acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(a0, b0));
      acc1 = _mm256_add_epi64(acc1, _mm256_mul_epi32(a1, b1));
    }
    for (; i < n; ++i) {
      const __m256i a0 = _mm256_set1_epi64x(a[i]);
      const __m256i b0 = _mm256_loadu_si256(
          reinterpret_cast<const __m256i*>(bb.data() + n + k - i));
      acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(a0, b0));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + k),
                        _mm256_add_epi64(acc0, acc1));
  }
  for (; k < n; ++k) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * bb[n + k - i];
    out[k] = acc;
  }
}

void add_mod_avx2(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b, std::span<std::int64_t> out,
                  std::int64_t m) {
  const std::size_t n = a.size();
  const __m256i vm = _mm256_set1_epi64x(m);
  const __m256i vm1 = _mm256_set1_epi64x(m - 1);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    const __m256i s = _mm256_add_epi64(va, vb);
    const __m256i wrap = _mm256_cmpgt_epi64(s, vm1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i),
                        _mm256_sub_epi64(s, _mm256_and_si256(wrap, vm)));
  }
  for (; i < n; ++i) {
    const std::int64_t s = a[i] + b[i];
    out[i] = s >= m ? s - m : s;
  }
}

void center_avx2(std::span<const std::int64_t> a, std::span<std::int64_t> out,
                 std::int64_t m) {
  const std::size_t n = a.size();
  const std::int64_t half = m / 2;
  const __m256i vm = _mm256_set1_epi64x(m);
  const __m256i vhalf = _mm256_set1_epi64x(half);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i hi = _mm256_cmpgt_epi64(va, vhalf);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i),
                        _mm256_sub_epi64(va, _mm256_and_si256(hi, vm)));
  }
  for (; i < n; ++i) out[i] = a[i] > half ? a[i] - m : a[i];
}

constexpr KernelTable kAvx2Table{Isa::kAvx2, &convolve_avx2, &add_mod_avx2,
                                 &center_avx2};

}  // namespace

const KernelTable* avx2_table_unchecked() { return &kAvx2Table; }

}  // namespace ntruhe::kernels
