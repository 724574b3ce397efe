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

#include <atomic>
#include <cstdlib>

#include "kernels_internal.hpp"

namespace ntruhe::kernels {
namespace {

#if defined(NTRUHE_HAVE_AVX2)
bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const KernelTable* initial_table() {
  if (const char* env = std::getenv("NTRUHE_ISA")) {
    if (auto isa = parse_isa(env)) {
      if (*isa == Isa::kScalar) return &scalar_kernels();
      if (const KernelTable* t = avx2_kernels()) return t;
    }
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::kScalar;
  if (name == "avx2") return Isa::kAvx2;
  return std::nullopt;
}

const KernelTable* avx2_kernels() {
#if defined(NTRUHE_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? avx2_table_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

bool available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return avx2_kernels() != nullptr;
  }
  return false;
}

const KernelTable& active() {
  return *current().load(std::memory_order_acquire);
}

bool select(Isa isa) {
  const KernelTable* t = nullptr;
  if (isa == Isa::kScalar) t = &scalar_kernels();
  if (isa == Isa::kAvx2) t = avx2_kernels();
  if (t == nullptr) return false;
  current().store(t, std::memory_order_release);
  return true;
}

}  // namespace ntruhe::kernels
