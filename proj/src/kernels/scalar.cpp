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

#include "kernels_internal.hpp"

namespace ntruhe::kernels {
namespace {

void convolve_scalar(std::span<const std::int64_t> a,
                     std::span<const std::int64_t> b,
                     std::span<std::int64_t> out) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) out[k] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out[k] += a[i] * b[j];
    }
  }
}

void add_mod_scalar(std::span<const std::int64_t> a,
                    std::span<const std::int64_t> b,
                    std::span<std::int64_t> out, std::int64_t m) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t s = a[i] + b[i];
    out[i] = s >= m ? s - m : s;
  }
}

void center_scalar(std::span<const std::int64_t> a, std::span<std::int64_t> out,
                   std::int64_t m) {
  const std::int64_t half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] > half ? a[i] - m : a[i];
  }
}

constexpr KernelTable kScalarTable{Isa::kScalar, &convolve_scalar,
                                   &add_mod_scalar, &center_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace ntruhe::kernels
