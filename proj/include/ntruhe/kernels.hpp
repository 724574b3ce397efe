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

#pragma once

// Coefficient-vector inner loops behind the polynomial ring. Every kernel has
// a scalar reference implementation; wider variants are picked at runtime and
// must produce bit-identical output.
//
// The kernels do no validation. Callers (polyring.cpp) guarantee equal
// lengths, operands whose magnitude fits in 31 bits, and accumulators that
// cannot overflow int64.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace ntruhe::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
  Isa isa;

  // out[k] = sum over i + j == k (mod n) of a[i] * b[j], without reduction.
  // Requires |a[i]|, |b[j]| < 2^31 and every sum to fit in int64.
  void (*cyclic_convolve)(std::span<const std::int64_t> a,
                          std::span<const std::int64_t> b,
                          std::span<std::int64_t> out);

  // out[i] = (a[i] + b[i]) mod m, for a[i], b[i] in [0, m).
  void (*add_mod)(std::span<const std::int64_t> a,
                  std::span<const std::int64_t> b, std::span<std::int64_t> out,
                  std::int64_t m);

  // Maps a[i] in [0, m) to its representative in (-m/2, m/2] (even m) or
  // [-(m-1)/2, (m-1)/2] (odd m).
  void (*center)(std::span<const std::int64_t> a, std::span<std::int64_t> out,
                 std::int64_t m);
};

const KernelTable& scalar_kernels();

// Null when the variant was not compiled in or the CPU lacks the feature.
const KernelTable* avx2_kernels();

bool available(Isa isa);

// The table used by polyring. Defaults to the widest supported ISA; the
// NTRUHE_ISA environment variable ("scalar", "avx2") overrides on first use.
const KernelTable& active();

// Forces a variant. Returns false (and changes nothing) if unavailable.
bool select(Isa isa);

}  // namespace ntruhe::kernels
